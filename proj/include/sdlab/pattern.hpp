#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sdlab/numeric.hpp"

namespace sdlab {

// Erasure pattern E over the grid [m] x [n], cells kept sorted and unique
// (1-indexed in serialized form, 0-indexed here).
struct ErasurePattern {
    int m = 0, n = 0;
    std::vector<std::pair<int, int>> cells;

    ErasurePattern() = default;
    ErasurePattern(int m_, int n_, std::vector<std::pair<int, int>> cs)
        : m(m_), n(n_), cells(std::move(cs)) {
        for (auto [i, j] : cells)
            if (i < 0 || i >= m || j < 0 || j >= n)
                throw std::invalid_argument("ErasurePattern: cell out of range");
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    }

    static ErasurePattern from_mask(int m, int n, u64 mask) {
        std::vector<std::pair<int, int>> cs;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (mask & (u64(1) << (i * n + j))) cs.emplace_back(i, j);
        return ErasurePattern(m, n, std::move(cs));
    }

    u64 mask() const {
        u64 v = 0;
        for (auto [i, j] : cells) v |= u64(1) << (i * n + j);
        return v;
    }

    size_t size() const { return cells.size(); }

    bool contains(int i, int j) const {
        return std::binary_search(cells.begin(), cells.end(), std::make_pair(i, j));
    }

    // E_j = {i : (i,j) in E}
    std::vector<int> column_set(int j) const {
        std::vector<int> out;
        for (auto [r, c] : cells)
            if (c == j) out.push_back(r);
        return out;
    }

    ErasurePattern complement() const {
        std::vector<std::pair<int, int>> cs;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (!contains(i, j)) cs.emplace_back(i, j);
        return ErasurePattern(m, n, std::move(cs));
    }

    ErasurePattern transpose() const {
        std::vector<std::pair<int, int>> cs;
        for (auto [i, j] : cells) cs.emplace_back(j, i);
        return ErasurePattern(n, m, std::move(cs));
    }

    bool operator==(const ErasurePattern& o) const {
        return m == o.m && n == o.n && cells == o.cells;
    }
};

// Block blow-up E^{s,t} over [sm] x [tn]: cell (i,j) becomes the full s x t
// block, non-cells stay empty.
inline ErasurePattern scale_pattern(const ErasurePattern& e, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("scale_pattern: s,t >= 1 required");
    std::vector<std::pair<int, int>> cs;
    cs.reserve(e.cells.size() * static_cast<size_t>(s) * t);
    for (auto [i, j] : e.cells)
        for (int x = 0; x < s; ++x)
            for (int y = 0; y < t; ++y) cs.emplace_back(s * i + x, t * j + y);
    return ErasurePattern(s * e.m, t * e.n, std::move(cs));
}

}  // namespace sdlab
