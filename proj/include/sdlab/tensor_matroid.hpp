#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdlab/codes.hpp"
#include "sdlab/pattern.hpp"

namespace sdlab {

template <class F>
struct CorrectabilityResult {
    bool correctable = false;
    // when not correctable: a nonzero codeword of c_col ⊗ c_row supported on
    // E, shaped m x n
    std::optional<Matrix<F>> certificate;
};

// E is correctable iff no nonzero tensor codeword is supported on E, i.e.
// the only X in F^{k_col x k_row} with G_col^T X G_row vanishing on the
// complement of E is X = 0.  Unknowns are the (m-a)(n-b) entries of X, never
// the mn grid cells.
template <class F>
CorrectabilityResult<F> is_correctable(const LinearCode<F>& c_col, const LinearCode<F>& c_row,
                                       const ErasurePattern& e) {
    if (c_col.s() != 1 || c_row.s() != 1)
        throw std::invalid_argument("is_correctable: factors must be unfolded");
    c_col.generator().require_same_field(c_row.generator());
    if (e.m != c_col.n() || e.n != c_row.n())
        throw std::invalid_argument("is_correctable: grid shape mismatch");
    const F& f = c_col.field();
    int kc = c_col.k(), kr = c_row.k();
    auto complement = e.complement();
    Matrix<F> sys(f, static_cast<int>(complement.size()), kc * kr);
    int row = 0;
    for (auto [i, j] : complement.cells) {
        for (int u = 0; u < kc; ++u) {
            const auto& gc = c_col.generator().at(u, i);
            if (f.is_zero(gc)) continue;
            for (int v = 0; v < kr; ++v)
                sys.at(row, u * kr + v) = f.mul(gc, c_row.generator().at(v, j));
        }
        ++row;
    }
    auto ker = kernel_basis(sys);
    if (ker.rows() == 0) return {true, std::nullopt};
    // materialize the codeword G_col^T X G_row for the first kernel vector
    Matrix<F> x(f, kc, kr);
    for (int u = 0; u < kc; ++u)
        for (int v = 0; v < kr; ++v) x.at(u, v) = ker.at(0, u * kr + v);
    auto word = c_col.generator().transpose().mul(x).mul(c_row.generator());
    return {false, std::move(word)};
}

// Independent re-verification of a correctability certificate: nonzero,
// vanishes off E, every row in c_row and every column in c_col.
template <class F>
bool validate_correctability_certificate(const LinearCode<F>& c_col, const LinearCode<F>& c_row,
                                         const ErasurePattern& e, const Matrix<F>& word) {
    const F& f = word.field();
    if (word.rows() != e.m || word.cols() != e.n) return false;
    if (word.is_zero()) return false;
    for (int i = 0; i < e.m; ++i)
        for (int j = 0; j < e.n; ++j)
            if (!e.contains(i, j) && !f.is_zero(word.at(i, j))) return false;
    for (int i = 0; i < e.m; ++i)
        if (!c_row.contains_word(word.row(i))) return false;
    auto t = word.transpose();
    for (int j = 0; j < e.n; ++j)
        if (!c_col.contains_word(t.row(j))) return false;
    return true;
}

template <class F>
struct PotentialResult {
    long phi = 0;
    std::optional<Subspace<F>> maximizer;  // subcode of c_col attaining phi
};

// Phi(E) = max over subcodes U of c_col of [-b dim U + sum_j dim(U ∩ F^{E_j})].
// The maximization enumerates subspaces of the message space and maps them
// through the generator; finite fields only, except that over Q a
// 1-dimensional code still has the trivial subspace lattice {0, C}.  For
// larger rational codes use a large-prime stand-in code and carry the
// Schwartz-Zippel caveat in the report.
template <class F>
PotentialResult<F> potential_phi(const LinearCode<F>& c_col, int b, const ErasurePattern& e,
                                 u64 guard = kDefaultSubspaceGuard) {
    if (c_col.s() != 1) throw std::invalid_argument("potential_phi: column code must be unfolded");
    if (e.m != c_col.n()) throw std::invalid_argument("potential_phi: grid height mismatch");
    const F& f = c_col.field();
    int kc = c_col.k();

    // complement columns of each E_j, for dim(U ∩ F^{E_j}) = dim U - rank(B|_off)
    std::vector<std::vector<int>> off(e.n);
    for (int j = 0; j < e.n; ++j) {
        auto in_col = e.column_set(j);
        std::vector<bool> mark(e.m, false);
        for (int i : in_col) mark[i] = true;
        for (int i = 0; i < e.m; ++i)
            if (!mark[i]) off[j].push_back(i);
    }

    auto value_of = [&](const Subspace<F>& u) {
        long v = -static_cast<long>(b) * u.dim();
        for (int j = 0; j < e.n; ++j)
            v += u.dim() - rank(u.basis().columns(off[j]));
        return v;
    };

    PotentialResult<F> out;
    out.phi = 0;
    out.maximizer = Subspace<F>::zero(f, e.m);

    auto consider = [&](const Subspace<F>& u) {
        long v = value_of(u);
        if (v > out.phi) {
            out.phi = v;
            out.maximizer = u;
        }
    };

    if constexpr (std::is_same_v<F, RationalField>) {
        if (kc > 1)
            throw std::invalid_argument(
                "potential_phi: cannot enumerate subcodes over Q for k > 1; "
                "use a large-prime stand-in code");
        consider(Subspace<F>::from_spanning(c_col.generator()));
    } else {
        Int total = 0;
        for (int d = 0; d <= kc; ++d) total += count_subspaces(kc, d, f.order());
        if (total > Int(static_cast<unsigned long>(guard))) throw EnumerationGuardError(total);
        for (int d = 1; d <= kc; ++d) {
            SubspaceRange<F> range(f, kc, d, guard);
            for (u64 i = 0; i < range.size(); ++i) {
                auto msgs = range.at(i);
                consider(Subspace<F>::from_spanning(msgs.basis().mul(c_col.generator())));
            }
        }
    }
    return out;
}

// r(E) = |E| - Phi(E): the rank function of the potential matroid
// M(c_col, n, b).
template <class F>
long potential_rank(const LinearCode<F>& c_col, int b, const ErasurePattern& e,
                    u64 guard = kDefaultSubspaceGuard) {
    return static_cast<long>(e.size()) - potential_phi(c_col, b, e, guard).phi;
}

// ---------------------------------------------------------------------------
// Matroid audits.

struct AxiomAuditReport {
    bool passed = false;
    u64 patterns_checked = 0;
    std::string first_violation;  // empty when clean
};

// Exhaustive check of the four rank-function axioms over every subset pair
// of the mn grid.
inline AxiomAuditReport matroid_axiom_audit(const std::function<long(const ErasurePattern&)>& rank_fn,
                                            int m, int n, int guard_cells = 16) {
    if (m * n > guard_cells)
        throw std::invalid_argument("matroid_axiom_audit: grid exceeds guard");
    int cells = m * n;
    u64 total = u64(1) << cells;
    std::vector<long> r(total);
    std::vector<int> popcount(total);
    for (u64 mask = 0; mask < total; ++mask) {
        r[mask] = rank_fn(ErasurePattern::from_mask(m, n, mask));
        popcount[mask] = __builtin_popcountll(mask);
    }
    AxiomAuditReport rep;
    rep.patterns_checked = total;
    auto fail = [&](std::string msg) {
        rep.first_violation = std::move(msg);
        return rep;
    };
    for (u64 mask = 0; mask < total; ++mask) {
        if (r[mask] < 0) return fail("r < 0 at mask " + std::to_string(mask));
        if (r[mask] > popcount[mask]) return fail("r > |E| at mask " + std::to_string(mask));
    }
    // monotonicity over all nested pairs via submask enumeration
    for (u64 mask = 0; mask < total; ++mask) {
        u64 sub = mask;
        while (true) {
            if (r[sub] > r[mask])
                return fail("monotonicity fails at " + std::to_string(sub) + " subset of " +
                            std::to_string(mask));
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    for (u64 a = 0; a < total; ++a)
        for (u64 b = a; b < total; ++b)
            if (r[a & b] + r[a | b] > r[a] + r[b])
                return fail("submodularity fails at masks " + std::to_string(a) + "," +
                            std::to_string(b));
    rep.passed = true;
    return rep;
}

// Independence predicate with provenance; rank queries reduce to greedy
// augmentation in canonical cell order.
struct MatroidOracle {
    int m = 0, n = 0;
    std::string provenance;
    std::function<bool(const ErasurePattern&)> independent;

    long rank_of(const ErasurePattern& e) const {
        std::vector<std::pair<int, int>> kept;
        for (auto cell : e.cells) {
            kept.push_back(cell);
            if (!independent(ErasurePattern(m, n, kept))) kept.pop_back();
        }
        return static_cast<long>(kept.size());
    }

    long rank() const {
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) all.emplace_back(i, j);
        return rank_of(ErasurePattern(m, n, all));
    }
};

struct BirigidityAuditReport {
    bool passed = false;
    long expected_rank = 0;
    long actual_rank = 0;
    bool rectangles_vacuous = false;  // no (a+1) x (b+1) rectangle fits
    std::string first_violation;
};

// An (m,n,a,b) abstract birigidity matroid has rank bm + an - ab and every
// (a+1) x (b+1) rectangle as a circuit (dependent, all one-cell deletions
// independent).
inline BirigidityAuditReport abstract_birigidity_audit(const MatroidOracle& oracle, int a, int b) {
    int m = oracle.m, n = oracle.n;
    BirigidityAuditReport rep;
    rep.expected_rank = static_cast<long>(b) * m + static_cast<long>(a) * n -
                        static_cast<long>(a) * b;
    rep.actual_rank = oracle.rank();
    if (rep.actual_rank != rep.expected_rank) {
        rep.first_violation = "rank " + std::to_string(rep.actual_rank) + " != expected " +
                              std::to_string(rep.expected_rank);
        return rep;
    }
    rep.rectangles_vacuous = (a + 1 > m) || (b + 1 > n);
    if (!rep.rectangles_vacuous) {
        std::vector<int> rows(a + 1), cols(b + 1);
        for (int i = 0; i <= a; ++i) rows[i] = i;
        auto next_comb = [](std::vector<int>& c, int lim) {
            int k = static_cast<int>(c.size());
            int i = k - 1;
            while (i >= 0 && c[i] == lim - k + i) --i;
            if (i < 0) return false;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        };
        do {
            for (int j = 0; j <= b; ++j) cols[j] = j;
            do {
                std::vector<std::pair<int, int>> cell_list;
                for (int i : rows)
                    for (int j : cols) cell_list.emplace_back(i, j);
                ErasurePattern rect(m, n, cell_list);
                if (oracle.independent(rect)) {
                    rep.first_violation = "rectangle not dependent";
                    return rep;
                }
                for (size_t drop = 0; drop < cell_list.size(); ++drop) {
                    auto sub = cell_list;
                    sub.erase(sub.begin() + static_cast<long>(drop));
                    if (!oracle.independent(ErasurePattern(m, n, sub))) {
                        rep.first_violation = "rectangle minus a cell not independent";
                        return rep;
                    }
                }
            } while (next_comb(cols, n));
        } while (next_comb(rows, m));
    }
    rep.passed = true;
    return rep;
}

struct MonotonicityReport {
    bool passed = false;
    u64 patterns_checked = 0;
    u64 correctable_count = 0;
    std::string first_violation;
};

// Correctable for c_col ⊗ c_row implies independent in M(c_col, n, b), for
// every pattern of the grid.
template <class F>
MonotonicityReport monotonicity_check(const LinearCode<F>& c_col, const LinearCode<F>& c_row,
                                      int b, int guard_cells = 16,
                                      u64 guard = kDefaultSubspaceGuard) {
    int m = c_col.n(), n = c_row.n();
    if (m * n > guard_cells) throw std::invalid_argument("monotonicity_check: grid exceeds guard");
    MonotonicityReport rep;
    u64 total = u64(1) << (m * n);
    rep.patterns_checked = total;
    for (u64 mask = 0; mask < total; ++mask) {
        auto e = ErasurePattern::from_mask(m, n, mask);
        auto corr = is_correctable(c_col, c_row, e);
        if (!corr.correctable) continue;
        ++rep.correctable_count;
        if (potential_rank(c_col, b, e, guard) != static_cast<long>(e.size())) {
            rep.first_violation = "correctable but potential-dependent at mask " + std::to_string(mask);
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Scaling lemma at reduced margins.

struct ScalingMargins {
    int t = 0;
    int d = 0;
    // margins consumed by the proofs: d < t/m and d > (m-1)(n-b)
    static void require(int m, int n, int b, int t, int d) {
        if (!(static_cast<long>(d) * m < t))
            throw std::invalid_argument("scaling margins: need d < t/m");
        if (!(d > static_cast<long>(m - 1) * (n - b)))
            throw std::invalid_argument("scaling margins: need d > (m-1)(n-b)");
    }
    static bool hold(int m, int n, int b, int t, int d) {
        return static_cast<long>(d) * m < t && d > static_cast<long>(m - 1) * (n - b);
    }
};

struct ScalingCheckReport {
    bool margins_ok = false;
    int t = 0, d = 0, b_prime = 0;
    bool potential_independent = false;  // E in M(c_col, n, b)
    bool scaled_correctable = false;     // E^{1,t} in c_col ⊗ C^RS_row
    bool agree = false;
};

// Checks E independent in M(c_col, n, b)  <=>  E^{1,t} correctable in
// c_col ⊗ C^RS_row, with the rational RS row code [tn, tn - (bt+d)] on the
// odd-integer/gamma=2 point set.  Margin violations are refused, never
// weakened.
inline ScalingCheckReport scaling_lemma_check(const LinearCode<RationalField>& c_col, int b,
                                              const ErasurePattern& e, int t, int d) {
    int m = c_col.n(), n = e.n;
    if (e.m != m) throw std::invalid_argument("scaling_lemma_check: grid mismatch");
    ScalingMargins::require(m, n, b, t, d);
    ScalingCheckReport rep;
    rep.margins_ok = true;
    rep.t = t;
    rep.d = d;
    rep.b_prime = b * t + d;
    int k_row = t * n - rep.b_prime;
    if (k_row < 1) throw std::invalid_argument("scaling_lemma_check: row code dimension <= 0");
    auto row_code = unfold(folded_rs_code(odd_integer_scheme(n, t), k_row));
    rep.potential_independent =
        potential_rank(c_col, b, e) == static_cast<long>(e.size());
    rep.scaled_correctable = is_correctable(c_col, row_code, scale_pattern(e, 1, t)).correctable;
    rep.agree = rep.potential_independent == rep.scaled_correctable;
    return rep;
}

// Large-prime random stand-in for a generic [m, m-a] column code; the caller
// owns the Schwartz-Zippel caveat.
inline LinearCode<PrimeField> generic_standin_code(int m, int a, u64 prime, u64 seed) {
    PrimeField f(prime);
    Rng rng = Rng::derive(seed, 0);
    return random_linear_code(f, m, m - a, rng).code;
}

}  // namespace sdlab
