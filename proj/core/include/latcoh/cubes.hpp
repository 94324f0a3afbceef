#pragma once

#include <cstdint>
#include <vector>

#include "latcoh/table.hpp"

namespace latcoh {

// All cubes (l, I) of the rectangle of a weight table, graded by the
// direction set I (a bitmask over axes); the weight of a cube is the max of
// the vertex weights, computed by one max-fold per direction.
class CubeComplex {
  public:
    // cell_cap > 0 refuses complexes with more cells (TooLarge).
    explicit CubeComplex(const Table& w, int64_t cell_cap = 0);

    int rank() const { return rank_; }
    uint32_t mask_count() const { return 1u << rank_; }
    // Masks containing an axis of extent 1 carry no cubes.
    bool mask_valid(uint32_t mask) const { return valid_[mask]; }
    const Rect& base_rect(uint32_t mask) const { return weights_[mask].rect(); }
    const Table& weights(uint32_t mask) const { return weights_[mask]; }
    int64_t cells() const { return cells_; }
    int64_t cells_of_mask(uint32_t mask) const {
        return valid_[mask] ? weights_[mask].size() : 0;
    }

    // Alternating cube-weight sum: sum over cubes of (-1)^(q+1) w(cube).
    int64_t alternating_weight_sum() const;

  private:
    int rank_;
    int64_t cells_;
    std::vector<char> valid_;
    std::vector<Table> weights_;
};

} // namespace latcoh
