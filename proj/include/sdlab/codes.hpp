#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sdlab/subspace.hpp"

namespace sdlab {

// Evaluation data for (folded) Reed-Solomon constructions: nonzero gamma and
// alpha_1..alpha_n with the s*n points gamma^(j-1) * alpha_i pairwise
// distinct ("appropriate").  Verified eagerly at construction.
template <class F>
struct EvaluationScheme {
    using Elem = typename F::Elem;

    F field;
    Elem gamma;
    std::vector<Elem> alphas;
    int s;

    EvaluationScheme(const F& f, Elem g, std::vector<Elem> as, int s_)
        : field(f), gamma(std::move(g)), alphas(std::move(as)), s(s_) {
        if (s < 1) throw std::invalid_argument("EvaluationScheme: s < 1");
        if (field.is_zero(gamma)) throw std::invalid_argument("EvaluationScheme: gamma = 0");
        for (const auto& a : alphas)
            if (field.is_zero(a)) throw std::invalid_argument("EvaluationScheme: zero alpha");
        auto pts = flattened_points();
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (field.eq(pts[i], pts[j]))
                    throw std::invalid_argument("EvaluationScheme: points not pairwise distinct");
    }

    int n() const { return static_cast<int>(alphas.size()); }

    // alpha_1, g*alpha_1, ..., g^(s-1)*alpha_1, alpha_2, ...
    std::vector<Elem> flattened_points() const {
        std::vector<Elem> pts;
        pts.reserve(alphas.size() * s);
        for (const auto& a : alphas) {
            Elem cur = a;
            for (int j = 0; j < s; ++j) {
                pts.push_back(cur);
                cur = field.mul(cur, gamma);
            }
        }
        return pts;
    }

    // Order of gamma is at least k: required by the design constructions.
    bool gamma_order_at_least(u64 k) const {
        if constexpr (std::is_same_v<F, RationalField>) {
            // Nonzero rationals other than +-1 have infinite order.
            return !(gamma == 1 || gamma == -1) || k <= (gamma == 1 ? 1 : 2);
        } else {
            return element_order(field, gamma) >= k;
        }
    }
};

// Searches a scheme over F_q: gamma among primitive elements, alphas greedily
// so the s*n points stay distinct.
inline EvaluationScheme<PrimeField> find_scheme(const PrimeField& f, int n, int s) {
    u64 q = f.p;
    if (static_cast<u64>(n) * s > q - 1)
        throw std::invalid_argument("find_scheme: field too small for s*n distinct nonzero points");
    for (u64 g = 2; g < q; ++g) {
        if (multiplicative_order(g, q) != q - 1) continue;  // primitive only
        std::vector<bool> used(q, false);
        std::vector<u64> alphas;
        for (u64 a = 1; a < q && static_cast<int>(alphas.size()) < n; ++a) {
            u64 cur = a;
            bool ok = true;
            for (int j = 0; j < s; ++j) {
                if (used[cur]) { ok = false; break; }
                cur = mulmod(cur, g, q);
            }
            if (!ok) continue;
            cur = a;
            for (int j = 0; j < s; ++j) {
                used[cur] = true;
                cur = mulmod(cur, g, q);
            }
            alphas.push_back(a);
        }
        if (static_cast<int>(alphas.size()) == n)
            return EvaluationScheme<PrimeField>(f, g, alphas, s);
    }
    throw std::invalid_argument("find_scheme: no appropriate scheme found");
}

// gamma = 2 with consecutive odd alphas; always appropriate over Q since the
// odd part pins i and the 2-adic valuation pins j.
inline EvaluationScheme<RationalField> odd_integer_scheme(int n, int s) {
    RationalField f;
    std::vector<Rational> alphas;
    for (int i = 0; i < n; ++i) alphas.push_back(Rational(2 * i + 1));
    return EvaluationScheme<RationalField>(f, Rational(2), std::move(alphas), s);
}

// Generator-matrix representation of a (possibly folded) linear code.
// Position i in [n] carries the s-column block i of the generator, read as
// the encoder pi_i : F^k -> F^s.
template <class F>
class LinearCode {
public:
    using Elem = typename F::Elem;

    LinearCode(int k, int n, int s, Matrix<F> gen) : k_(k), n_(n), s_(s), gen_(std::move(gen)) {
        if (k < 1 || n < 1 || s < 1) throw std::invalid_argument("LinearCode: bad shape");
        if (gen_.rows() != k || gen_.cols() != s * n)
            throw std::invalid_argument("LinearCode: generator shape mismatch");
        if (static_cast<long>(s) * n < k) throw std::invalid_argument("LinearCode: k > s*n");
        if (rank(gen_) != k) throw std::invalid_argument("LinearCode: generator not full rank");
    }

    int k() const { return k_; }
    int n() const { return n_; }
    int s() const { return s_; }
    int length() const { return s_ * n_; }
    const Matrix<F>& generator() const { return gen_; }
    const F& field() const { return gen_.field(); }
    Rational rate() const { return make_rational(k_, static_cast<long>(s_) * n_); }

    std::vector<Elem> encode(const std::vector<Elem>& msg) const {
        return gen_.left_mul_vec(msg);
    }

    // The s-column block of position i (0-indexed), as a k x s matrix.
    Matrix<F> encoder_block(int i) const {
        std::vector<int> cols(s_);
        for (int j = 0; j < s_; ++j) cols[j] = i * s_ + j;
        return gen_.columns(cols);
    }

    // ker(pi_i) <= F^k.
    Subspace<F> position_kernel(int i) const {
        return Subspace<F>::from_spanning(kernel_basis(encoder_block(i).transpose()));
    }

    bool contains_word(const std::vector<Elem>& word) const {
        Matrix<F> w(gen_.field(), 1, length());
        w.set_row(0, word);
        return rank(gen_.vstack(w)) == k_;
    }

private:
    int k_, n_, s_;
    Matrix<F> gen_;
};

template <class F>
LinearCode<F> rs_code(const F& field, const std::vector<typename F::Elem>& points, int k) {
    int n = static_cast<int>(points.size());
    if (k > n) throw std::invalid_argument("rs_code: k > number of points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (field.eq(points[i], points[j])) throw std::invalid_argument("rs_code: repeated points");
    Matrix<F> gen(field, k, n);
    for (int j = 0; j < n; ++j) {
        auto pw = field.one();
        for (int i = 0; i < k; ++i) {
            gen.at(i, j) = pw;
            pw = field.mul(pw, points[j]);
        }
    }
    return LinearCode<F>(k, n, 1, std::move(gen));
}

// Position i holds (f(a_i), f(g a_i), ..., f(g^(s-1) a_i)); the unfolded
// generator is exactly rs_code on the flattened point list.
template <class F>
LinearCode<F> folded_rs_code(const EvaluationScheme<F>& scheme, int k) {
    auto rs = rs_code(scheme.field, scheme.flattened_points(), k);
    return LinearCode<F>(k, scheme.n(), scheme.s, rs.generator());
}

template <class F>
LinearCode<F> unfold(const LinearCode<F>& c) {
    return LinearCode<F>(c.k(), c.length(), 1, c.generator());
}

// Kronecker-product generator; codewords reshaped as m x n matrices (cell
// (i,j) at flat index i*n + j) have every row in c_row and column in c_col.
template <class F>
LinearCode<F> tensor_code(const LinearCode<F>& c_col, const LinearCode<F>& c_row) {
    if (c_col.s() != 1 || c_row.s() != 1)
        throw std::invalid_argument("tensor_code: factors must be unfolded (s = 1)");
    c_col.generator().require_same_field(c_row.generator());
    return LinearCode<F>(c_col.k() * c_row.k(), c_col.n() * c_row.n(), 1,
                         c_col.generator().kron(c_row.generator()));
}

struct PuncturedCodeInfo {
    int dimension;
};

// C|_A on unfolded coordinates; the generator is row-reduced so the reported
// dimension is the rank of the restriction.
template <class F>
LinearCode<F> puncture(const LinearCode<F>& c, const std::vector<int>& kept) {
    if (kept.empty()) throw std::invalid_argument("puncture: empty kept set");
    auto restricted = c.generator().columns(kept);
    auto rr = rref(restricted);
    if (rr.rank == 0) throw std::invalid_argument("puncture: restriction is the zero code");
    Matrix<F> gen(c.field(), rr.rank, restricted.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < restricted.cols(); ++j) gen.at(i, j) = rr.reduced.at(i, j);
    return LinearCode<F>(rr.rank, static_cast<int>(kept.size()), 1, std::move(gen));
}

// Dimension of the restriction without constructing a code (works when the
// restriction is zero).
template <class F>
int puncture_dimension(const LinearCode<F>& c, const std::vector<int>& kept) {
    if (kept.empty()) return 0;
    return rank(c.generator().columns(kept));
}

template <class F>
struct RandomCodeResult {
    LinearCode<F> code;
    int resamples;
};

// Entries i.i.d. uniform; resamples (recorded) until the generator has full
// rank so the result is a genuine [sn, k] code.
template <class F>
RandomCodeResult<F> random_folded_linear_code(const F& field, int n, int k, int s, Rng& rng) {
    if (k > s * n) throw std::invalid_argument("random code: k > s*n");
    int resamples = 0;
    while (true) {
        Matrix<F> gen(field, k, s * n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < s * n; ++j) gen.at(i, j) = field.from_index(rng.below(field.order()));
        if (rank(gen) == k) return {LinearCode<F>(k, n, s, std::move(gen)), resamples};
        ++resamples;
    }
}

template <class F>
RandomCodeResult<F> random_linear_code(const F& field, int n, int k, Rng& rng) {
    return random_folded_linear_code(field, n, k, 1, rng);
}

// True iff every k x k minor of the generator is nonsingular.
template <class F>
bool is_mds(const LinearCode<F>& c, u64 guard = 1'000'000) {
    int n = c.length(), k = c.k();
    Int combos = 1;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > Int(static_cast<unsigned long>(guard))) throw EnumerationGuardError(combos);
    std::vector<int> sel(k);
    for (int i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        if (rank(c.generator().columns(sel)) != k) return false;
        int i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
}

}  // namespace sdlab
