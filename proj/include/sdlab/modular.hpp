#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sdlab/rational.hpp"

namespace sdlab {

// Fixed prime ladder for the modular certification path: 128 primes just
// above 2^61, each chosen so that the multiplicative order of 2 exceeds 10^7
// (the gamma = 2 power points of a block must stay distinct mod p for the
// block-rank shortcut to bite).  rank mod p lower-bounds the rank over Q for
// every prime, so a "bad" prime can only lose precision, never soundness.
inline const std::array<u64, 128>& modular_ladder() {
    static const std::array<u64, 128> ladder = {
        2305843009213693967ull, 2305843009213693973ull, 2305843009213694009ull, 2305843009213694017ull,
        2305843009213694087ull, 2305843009213694149ull, 2305843009213694173ull, 2305843009213694207ull,
        2305843009213694257ull, 2305843009213694317ull, 2305843009213694323ull, 2305843009213694381ull,
        2305843009213694411ull, 2305843009213694429ull, 2305843009213694443ull, 2305843009213694491ull,
        2305843009213694497ull, 2305843009213694569ull, 2305843009213694597ull, 2305843009213694683ull,
        2305843009213694791ull, 2305843009213694837ull, 2305843009213694851ull, 2305843009213694887ull,
        2305843009213694917ull, 2305843009213694963ull, 2305843009213695001ull, 2305843009213695011ull,
        2305843009213695023ull, 2305843009213695113ull, 2305843009213695187ull, 2305843009213695191ull,
        2305843009213695209ull, 2305843009213695257ull, 2305843009213695349ull, 2305843009213695361ull,
        2305843009213695397ull, 2305843009213695431ull, 2305843009213695437ull, 2305843009213695509ull,
        2305843009213695529ull, 2305843009213695547ull, 2305843009213695551ull, 2305843009213695563ull,
        2305843009213695577ull, 2305843009213695673ull, 2305843009213695701ull, 2305843009213695793ull,
        2305843009213695803ull, 2305843009213695829ull, 2305843009213695869ull, 2305843009213695871ull,
        2305843009213695901ull, 2305843009213695937ull, 2305843009213695997ull, 2305843009213696097ull,
        2305843009213696129ull, 2305843009213696163ull, 2305843009213696219ull, 2305843009213696321ull,
        2305843009213696339ull, 2305843009213696343ull, 2305843009213696367ull, 2305843009213696373ull,
        2305843009213696391ull, 2305843009213696409ull, 2305843009213696429ull, 2305843009213696499ull,
        2305843009213696529ull, 2305843009213696549ull, 2305843009213696591ull, 2305843009213696639ull,
        2305843009213696643ull, 2305843009213696747ull, 2305843009213696751ull, 2305843009213696829ull,
        2305843009213696903ull, 2305843009213696913ull, 2305843009213697011ull, 2305843009213697021ull,
        2305843009213697101ull, 2305843009213697141ull, 2305843009213697153ull, 2305843009213697209ull,
        2305843009213697243ull, 2305843009213697249ull, 2305843009213697251ull, 2305843009213697279ull,
        2305843009213697297ull, 2305843009213697381ull, 2305843009213697383ull, 2305843009213697411ull,
        2305843009213697479ull, 2305843009213697573ull, 2305843009213697587ull, 2305843009213697651ull,
        2305843009213697659ull, 2305843009213697689ull, 2305843009213697749ull, 2305843009213697761ull,
        2305843009213697771ull, 2305843009213697773ull, 2305843009213697917ull, 2305843009213697929ull,
        2305843009213697957ull, 2305843009213697963ull, 2305843009213698007ull, 2305843009213698013ull,
        2305843009213698083ull, 2305843009213698127ull, 2305843009213698151ull, 2305843009213698433ull,
        2305843009213698571ull, 2305843009213698587ull, 2305843009213698677ull, 2305843009213698701ull,
        2305843009213698749ull, 2305843009213698781ull, 2305843009213698847ull, 2305843009213698869ull,
        2305843009213698881ull, 2305843009213698919ull, 2305843009213698943ull, 2305843009213698979ull,
        2305843009213699031ull, 2305843009213699057ull, 2305843009213699061ull, 2305843009213699093ull};
    return ladder;
}

// Incremental mod-p row-echelon eliminator with optional early exit; rows
// live in the Montgomery domain for the hot update loop.  The RREF of the
// accumulated row space is canonical, so pivots and kernel vectors do not
// depend on insertion order.
class ModEliminator {
public:
    ModEliminator(u64 p, int cols) : mont_(p), p_(p), cols_(cols), row_of_col_(cols, -1) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    u64 prime() const { return p_; }

    // Returns true if the row increased the rank.  Input in plain residues.
    bool add_row(const std::vector<u64>& row_in) {
        std::vector<u64> row(cols_);
        for (int j = 0; j < cols_; ++j) row[j] = mont_.to(row_in[j]);
        reduce(row);
        int piv = -1;
        for (int j = 0; j < cols_; ++j)
            if (row[j]) { piv = j; break; }
        if (piv < 0) return false;
        // normalize pivot to montgomery one
        u64 inv = mont_.to(invmod_prime(mont_.from(row[piv]), p_));
        for (int j = piv; j < cols_; ++j) row[j] = mont_.mul(row[j], inv);
        row_of_col_[piv] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }

    std::vector<int> sorted_pivots() const {
        auto p = pivots_;
        std::sort(p.begin(), p.end());
        return p;
    }

    // Canonical kernel vector (plain residues) for the smallest free column,
    // after back-substitution; empty when full rank.
    std::vector<u64> kernel_vector_first_free() {
        if (rank() == cols_) return {};
        finalize_rref();
        int free_col = -1;
        for (int j = 0; j < cols_; ++j)
            if (row_of_col_[j] < 0) { free_col = j; break; }
        std::vector<u64> x(cols_, 0);
        x[free_col] = 1;
        for (size_t r = 0; r < rows_.size(); ++r) {
            u64 v = mont_.from(rows_[r][free_col]);
            x[pivots_[r]] = v ? p_ - v : 0;
        }
        return x;
    }

private:
    void reduce(std::vector<u64>& row) const {
        for (int j = 0; j < cols_; ++j) {
            if (!row[j]) continue;
            int r = row_of_col_[j];
            if (r < 0) continue;
            u64 f = row[j];
            const auto& basis = rows_[r];
            row[j] = 0;
            for (int c = j + 1; c < cols_; ++c)
                if (basis[c]) row[c] = mont_.sub(row[c], mont_.mul(f, basis[c]));
        }
    }

    void finalize_rref() {
        // clear entries above/below at every pivot column
        std::vector<size_t> order(rows_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots_[a] > pivots_[b]; });
        for (size_t oi : order) {
            int pc = pivots_[oi];
            const auto basis = rows_[oi];
            for (size_t r = 0; r < rows_.size(); ++r) {
                if (r == oi || !rows_[r][pc]) continue;
                u64 f = rows_[r][pc];
                auto& target = rows_[r];
                for (int c = pc; c < cols_; ++c)
                    if (basis[c]) target[c] = mont_.sub(target[c], mont_.mul(f, basis[c]));
            }
        }
    }

    Montgomery64 mont_;
    u64 p_;
    int cols_;
    std::vector<std::vector<u64>> rows_;
    std::vector<int> pivots_;
    std::vector<int> row_of_col_;
};

}  // namespace sdlab
