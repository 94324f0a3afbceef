#pragma once

#include <cstdint>
#include <vector>

namespace latcoh {

// Invariant factors of an integer matrix: positive d_1 | d_2 | ... | d_r,
// r = rank. Exact arithmetic, overflow is a hard error.
std::vector<int64_t> smith_invariant_factors(std::vector<std::vector<int64_t>> m);

} // namespace latcoh
