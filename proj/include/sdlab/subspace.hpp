#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdlab/matrix.hpp"

namespace sdlab {

struct EnumerationGuardError : std::runtime_error {
    Int estimate;
    explicit EnumerationGuardError(Int est)
        : std::runtime_error("search too large: estimated " + est.get_str() + " items"),
          estimate(std::move(est)) {}
};

constexpr u64 kDefaultSubspaceGuard = 10'000'000;

// Linear subspace of F^k in canonical form: the basis matrix is the RREF of
// any spanning set, so two subspaces are equal iff their representations are
// identical.  The zero subspace (0 x k basis) is a first-class value.
template <class F>
class Subspace {
public:
    using Elem = typename F::Elem;

    static Subspace zero(const F& field, int ambient) {
        return Subspace(Matrix<F>(field, 0, ambient), {});
    }

    static Subspace full(const F& field, int ambient) {
        std::vector<int> piv(ambient);
        for (int i = 0; i < ambient; ++i) piv[i] = i;
        return Subspace(Matrix<F>::identity(field, ambient), std::move(piv));
    }

    static Subspace from_spanning(const Matrix<F>& rows) {
        auto rr = rref(rows);
        Matrix<F> basis(rows.field(), rr.rank, rows.cols());
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = rr.reduced.at(i, j);
        return Subspace(std::move(basis), std::move(rr.pivots));
    }

    // Trusted constructor: caller guarantees the matrix is already in RREF
    // with the given pivots (used by the enumerator).
    static Subspace from_rref(Matrix<F> basis, std::vector<int> pivots) {
        return Subspace(std::move(basis), std::move(pivots));
    }

    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const F& field() const { return basis_.field(); }

    bool equals(const Subspace& o) const { return basis_.equals(o.basis_); }

    bool contains_vec(const std::vector<Elem>& v) const {
        const F& f = field();
        std::vector<Elem> w = v;
        for (int i = 0; i < dim(); ++i) {
            const Elem& c = w[pivots_[i]];
            if (f.is_zero(c)) continue;
            Elem factor = c;
            for (int j = 0; j < ambient(); ++j)
                w[j] = f.sub(w[j], f.mul(factor, basis_.at(i, j)));
        }
        for (const auto& x : w)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        for (int i = 0; i < o.dim(); ++i)
            if (!contains_vec(o.basis_.row(i))) return false;
        return true;
    }

    Subspace join(const Subspace& o) const {
        require_compatible(o);
        return from_spanning(basis_.vstack(o.basis_));
    }

    // Zassenhaus: rref [[A A],[B 0]]; rows with vanishing left block carry a
    // basis of the intersection in their right block.
    Subspace meet(const Subspace& o) const {
        require_compatible(o);
        const F& f = field();
        int k = ambient();
        Matrix<F> z(f, dim() + o.dim(), 2 * k);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < k; ++j) {
                z.at(i, j) = basis_.at(i, j);
                z.at(i, k + j) = basis_.at(i, j);
            }
        for (int i = 0; i < o.dim(); ++i)
            for (int j = 0; j < k; ++j) z.at(dim() + i, j) = o.basis_.at(i, j);
        auto rr = rref(std::move(z));
        Matrix<F> inter(f, 0, k);
        std::vector<std::vector<Elem>> rows;
        for (int i = 0; i < rr.rank; ++i) {
            bool left_zero = true;
            for (int j = 0; j < k && left_zero; ++j)
                if (!f.is_zero(rr.reduced.at(i, j))) left_zero = false;
            if (!left_zero) continue;
            std::vector<Elem> row(k);
            for (int j = 0; j < k; ++j) row[j] = rr.reduced.at(i, k + j);
            rows.push_back(std::move(row));
        }
        Matrix<F> m(f, static_cast<int>(rows.size()), k);
        for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
        return from_spanning(m);
    }

private:
    Subspace(Matrix<F> basis, std::vector<int> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    void require_compatible(const Subspace& o) const {
        if (ambient() != o.ambient()) throw std::invalid_argument("subspace ambient mismatch");
        basis_.require_same_field(o.basis_);
    }

    Matrix<F> basis_;
    std::vector<int> pivots_;
};

// Number of d-dimensional subspaces of F_q^k (Gaussian binomial
// [k choose d]_q); the pivot-pattern enumeration oracle in the tests
// recomputes this by brute force.
inline Int count_subspaces(int k, int d, u64 q) {
    if (d < 0 || d > k) return 0;
    Int qz(static_cast<unsigned long>(q));
    Int num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        Int qk, qd;
        mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(k - i));
        mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(d - i));
        num *= qk - 1;
        den *= qd - 1;
    }
    return num / den;
}

// Canonical enumeration of all d-dimensional subspaces of F_q^k: pivot sets
// in lexicographic order, then free entries as a mixed-radix odometer with
// the last (row-major) free position fastest.  Supports random access so
// audits can partition the index range across threads.
template <class F>
class SubspaceRange {
public:
    SubspaceRange(const F& field, int k, int d, u64 guard = kDefaultSubspaceGuard)
        : field_(field), k_(k), d_(d) {
        if (d < 0 || d > k) throw std::invalid_argument("SubspaceRange: d out of range");
        Int est = count_subspaces(k, d, field.order());
        if (est > Int(static_cast<unsigned long>(guard))) throw EnumerationGuardError(est);
        total_ = static_cast<u64>(est.get_ui());
        // precompute pivot sets and per-set counts
        if (d == 0) {
            pivot_sets_.push_back({});
            counts_.push_back(1);
        } else {
            std::vector<int> piv(d);
            for (int i = 0; i < d; ++i) piv[i] = i;
            while (true) {
                pivot_sets_.push_back(piv);
                int fc = 0;
                for (int i = 0; i < d; ++i) fc += (k - piv[i] - 1) - (d - i - 1);
                u64 cnt = 1;
                for (int i = 0; i < fc; ++i) cnt *= field.order();
                counts_.push_back(cnt);
                int i = d - 1;
                while (i >= 0 && piv[i] == k - d + i) --i;
                if (i < 0) break;
                ++piv[i];
                for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
            }
        }
        offsets_.resize(counts_.size() + 1, 0);
        for (size_t i = 0; i < counts_.size(); ++i) offsets_[i + 1] = offsets_[i] + counts_[i];
    }

    u64 size() const { return total_; }

    Subspace<F> at(u64 idx) const {
        if (idx >= total_) throw std::out_of_range("SubspaceRange::at");
        size_t set_i = std::upper_bound(offsets_.begin(), offsets_.end(), idx) - offsets_.begin() - 1;
        u64 rem = idx - offsets_[set_i];
        const std::vector<int>& piv = pivot_sets_[set_i];
        Matrix<F> basis(field_, d_, k_);
        std::vector<bool> is_piv(k_, false);
        for (int c : piv) is_piv[c] = true;
        for (int i = 0; i < d_; ++i) basis.at(i, piv[i]) = field_.one();
        // free positions row-major; decode rem big-endian so the last
        // position varies fastest
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < d_; ++i)
            for (int j = piv[i] + 1; j < k_; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        u64 q = field_.order();
        for (size_t t = free_pos.size(); t-- > 0;) {
            u64 digit = rem % q;
            rem /= q;
            basis.at(free_pos[t].first, free_pos[t].second) = field_.from_index(digit);
        }
        return Subspace<F>::from_rref(std::move(basis), piv);
    }

    template <class Fn>
    void for_each(Fn fn) const {
        for (u64 i = 0; i < total_; ++i) fn(at(i));
    }

private:
    F field_;
    int k_, d_;
    u64 total_ = 0;
    std::vector<std::vector<int>> pivot_sets_;
    std::vector<u64> counts_;
    std::vector<u64> offsets_;
};

// Seeded uniform d-dimensional subspace (for sampled, non-certifying audits).
template <class F>
Subspace<F> random_subspace(const F& field, int k, int d, Rng& rng) {
    while (true) {
        Matrix<F> m(field, d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = field.from_index(rng.below(field.order()));
        auto s = Subspace<F>::from_spanning(m);
        if (s.dim() == d) return s;
    }
}

// All subspaces of a given subspace U, via enumeration in U-coordinates.
template <class F, class Fn>
void for_each_subspace_of(const Subspace<F>& u, int d, Fn fn, u64 guard = kDefaultSubspaceGuard) {
    SubspaceRange<F> range(u.field(), u.dim(), d, guard);
    for (u64 i = 0; i < range.size(); ++i) {
        auto s = range.at(i);
        fn(Subspace<F>::from_spanning(s.basis().mul(u.basis())));
    }
}

}  // namespace sdlab
