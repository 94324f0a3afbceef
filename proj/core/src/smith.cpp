#include "latcoh/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "latcoh/errors.hpp"
#include "latcoh/rational.hpp"

namespace latcoh {

namespace {

int64_t abs64(int64_t x) { return x < 0 ? checked_sub(0, x) : x; }

} // namespace

std::vector<int64_t> smith_invariant_factors(std::vector<std::vector<int64_t>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int64_t> factors;
    int t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block
        // (prefers +-1, which keeps the elimination fraction-free and small).
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr < 0 || abs64(m[i][j]) < abs64(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                int64_t q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) { // remainder smaller than pivot: swap up
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                int64_t q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the remaining block.
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj)
                            m[t][jj] = checked_add(m[t][jj], m[i][jj]);
                        clean = false;
                    }
        }
        factors.push_back(abs64(m[t][t]));
        ++t;
    }
    return factors;
}

} // namespace latcoh
