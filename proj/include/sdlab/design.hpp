#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sdlab/codes.hpp"
#include "sdlab/parallel.hpp"
#include "sdlab/subspace.hpp"
#include "sdlab/wronskian.hpp"

namespace sdlab {

enum class DesignProvenance { GkConstruction, ExplicitList, FromCode };

template <class F>
struct SubspaceDesign {
    int ambient;  // k
    std::vector<Subspace<F>> spaces;
    DesignProvenance provenance;
};

// dim(H ∩ U) without forming the intersection: dim H + dim U - rank(stack).
template <class F>
int intersection_dim(const Subspace<F>& h, const Subspace<F>& u) {
    return h.dim() + u.dim() - rank(h.basis().vstack(u.basis()));
}

template <class F>
struct DesignAudit {
    int ell = 0;
    int a_strong = 0;
    int a_weak = 0;
    std::optional<Subspace<F>> witness_strong;
    std::optional<Subspace<F>> witness_weak;
    bool exhaustive = false;
    u64 subspaces_checked = 0;
};

namespace detail {

template <class F>
void audit_one(const SubspaceDesign<F>& design, const Subspace<F>& u, int& strong, int& weak) {
    strong = 0;
    weak = 0;
    for (const auto& h : design.spaces) {
        int d = intersection_dim(h, u);
        strong += d;
        if (d > 0) ++weak;
    }
}

}  // namespace detail

// Exhaustive maxima of sum dim(H_i ∩ U) (strong) and sum 1[H_i ∩ U != 0]
// (weak) over all ell-dimensional U, with argmax witnesses.  The witness is
// the first maximizer in canonical enumeration order, independent of the
// thread partitioning.
template <class F>
DesignAudit<F> audit_design(const SubspaceDesign<F>& design, int ell,
                            u64 guard = kDefaultSubspaceGuard, int threads = 1) {
    if (design.spaces.empty()) throw std::invalid_argument("audit_design: empty design");
    const F& field = design.spaces[0].field();
    SubspaceRange<F> range(field, design.ambient, ell, guard);
    struct Best {
        int strong = -1;
        u64 strong_idx = 0;
        int weak = -1;
        u64 weak_idx = 0;
    };
    std::vector<Best> partial(effective_threads(threads));
    parallel_chunks(range.size(), threads, [&](int tid, u64 begin, u64 end) {
        Best b;
        for (u64 i = begin; i < end; ++i) {
            auto u = range.at(i);
            int strong, weak;
            detail::audit_one(design, u, strong, weak);
            if (strong > b.strong) { b.strong = strong; b.strong_idx = i; }
            if (weak > b.weak) { b.weak = weak; b.weak_idx = i; }
        }
        partial[tid] = b;
    });
    Best merged;
    for (const auto& b : partial) {
        if (b.strong > merged.strong || (b.strong == merged.strong && b.strong_idx < merged.strong_idx))
            { merged.strong = b.strong; merged.strong_idx = b.strong_idx; }
        if (b.weak > merged.weak || (b.weak == merged.weak && b.weak_idx < merged.weak_idx))
            { merged.weak = b.weak; merged.weak_idx = b.weak_idx; }
    }
    DesignAudit<F> out;
    out.ell = ell;
    out.exhaustive = true;
    out.subspaces_checked = range.size();
    if (merged.strong >= 0) {
        out.a_strong = merged.strong;
        out.a_weak = merged.weak;
        out.witness_strong = range.at(merged.strong_idx);
        out.witness_weak = range.at(merged.weak_idx);
    }
    return out;
}

// Sampled audit: seeded uniform ell-subspaces.  One-sided by construction:
// it can refute a design bound but never certify one, hence exhaustive=false.
template <class F>
DesignAudit<F> audit_design_sampled(const SubspaceDesign<F>& design, int ell, u64 samples,
                                    u64 seed) {
    const F& field = design.spaces[0].field();
    DesignAudit<F> out;
    out.ell = ell;
    out.exhaustive = false;
    out.subspaces_checked = samples;
    out.a_strong = -1;
    out.a_weak = -1;
    for (u64 i = 0; i < samples; ++i) {
        Rng rng = Rng::derive(seed, i);
        auto u = random_subspace(field, design.ambient, ell, rng);
        int strong, weak;
        detail::audit_one(design, u, strong, weak);
        if (strong > out.a_strong) { out.a_strong = strong; out.witness_strong = u; }
        if (weak > out.a_weak) { out.a_weak = weak; out.witness_weak = u; }
    }
    return out;
}

// floor(l(k-l)/(s-l+1)): the improved strong-design bound for the
// Guruswami-Kopparty construction.
inline long design_bound(long k, long s, long ell) {
    if (ell < 1 || ell > s || s > k) throw std::invalid_argument("design_bound: need 1 <= l <= s <= k");
    return ell * (k - ell) / (s - ell + 1);
}

// floor(l(k-1)/(s-l+1)): the original bound, kept for comparison.
inline long gk_old_bound(long k, long s, long ell) {
    if (ell < 1 || ell > s || s > k) throw std::invalid_argument("gk_old_bound: need 1 <= l <= s <= k");
    return ell * (k - 1) / (s - ell + 1);
}

// Same arithmetic as design_bound, read as the impossibility threshold over
// algebraically closed fields: with n >= this value, an (l, value-1) weak
// design cannot exist.
inline long closed_field_floor(long k, long s, long ell) { return design_bound(k, s, ell); }

// H_i = kernel of the s evaluation maps at gamma^j alpha_i, j < s; each H_i
// has codimension s by appropriateness.
template <class F>
SubspaceDesign<F> gk_design(int k, const EvaluationScheme<F>& scheme) {
    const F& field = scheme.field;
    int s = scheme.s;
    if (s > k) throw std::invalid_argument("gk_design: s > k");
    if constexpr (!std::is_same_v<F, RationalField>) {
        if (field.order() <= static_cast<u64>(scheme.n()) * s)
            throw std::invalid_argument("gk_design: requires |F| > n*s");
    }
    if (!scheme.gamma_order_at_least(k))
        throw std::invalid_argument("gk_design: ord(gamma) < k");
    SubspaceDesign<F> design{k, {}, DesignProvenance::GkConstruction};
    for (int i = 0; i < scheme.n(); ++i) {
        Matrix<F> eval(field, s, k);
        auto pt = scheme.alphas[i];
        for (int j = 0; j < s; ++j) {
            auto pw = field.one();
            for (int c = 0; c < k; ++c) {
                eval.at(j, c) = pw;
                pw = field.mul(pw, pt);
            }
            pt = field.mul(pt, scheme.gamma);
        }
        design.spaces.push_back(Subspace<F>::from_spanning(kernel_basis(eval)));
    }
    return design;
}

// Kernels of the per-position encoders of a folded code.
template <class F>
SubspaceDesign<F> from_code_design(const LinearCode<F>& code) {
    SubspaceDesign<F> design{code.k(), {}, DesignProvenance::FromCode};
    for (int i = 0; i < code.n(); ++i) design.spaces.push_back(code.position_kernel(i));
    return design;
}

// The four 2-dimensional subspaces of F^4 (characteristic 3) whose weak
// audit at l = 2 stays at 3: H1 = <e1,e2>, H2 = <e3,e4>, H3 = <e1+e3,e2+e4>,
// H4 = <e1+e4,e2-e3>.
template <class F>
SubspaceDesign<F> f3_counterexample(const F& field) {
    auto vec = [&](std::initializer_list<int> entries) {
        Matrix<F> m(field, 1, 4);
        int j = 0;
        for (int e : entries) m.at(0, j++) = field.from_int(e);
        return m;
    };
    auto span2 = [&](Matrix<F> a, Matrix<F> b) {
        return Subspace<F>::from_spanning(a.vstack(b));
    };
    SubspaceDesign<F> design{4, {}, DesignProvenance::ExplicitList};
    design.spaces.push_back(span2(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})));
    design.spaces.push_back(span2(vec({0, 0, 1, 0}), vec({0, 0, 0, 1})));
    design.spaces.push_back(span2(vec({1, 0, 1, 0}), vec({0, 1, 0, 1})));
    design.spaces.push_back(span2(vec({1, 0, 0, 1}), vec({0, 1, -1, 0})));
    return design;
}

// Designability ledger of a folded code: per dimension d' <= b the exhaustive
// A_strong(d'), and the minimal slack mu with A_strong(d') <= (R+mu) d' n
// for all d'.
template <class F>
struct DesignabilityAudit {
    std::vector<DesignAudit<F>> per_dim;  // index d'-1
    Rational mu_min;
};

template <class F>
DesignabilityAudit<F> designability_audit(const LinearCode<F>& code, int b,
                                          u64 guard = kDefaultSubspaceGuard, int threads = 1) {
    auto design = from_code_design(code);
    DesignabilityAudit<F> out;
    out.mu_min = Rational(0);
    bool first = true;
    for (int d = 1; d <= b; ++d) {
        auto audit = audit_design(design, d, guard, threads);
        Rational mu = make_rational(audit.a_strong, static_cast<long>(d) * code.n()) - code.rate();
        if (first || mu > out.mu_min) out.mu_min = mu;
        first = false;
        out.per_dim.push_back(std::move(audit));
    }
    return out;
}

// A code is mu-slacked b-subspace designable iff for all d' <= b the
// exhaustive audit satisfies A_strong <= (R+mu) d' n.
template <class F>
bool is_slacked_designable(const DesignabilityAudit<F>& audit, const Rational& mu,
                           const Rational& rate, long n) {
    for (size_t i = 0; i < audit.per_dim.size(); ++i) {
        long d = static_cast<long>(i) + 1;
        if (Rational(audit.per_dim[i].a_strong) > (rate + mu) * Rational(d * n)) return false;
    }
    return true;
}

// Per-block support sum for a subcode V of a scheme-built RS code:
//   sum_i dim(V|_{I_i}) >= n dim(V) - dim(V)(k - dim(V))/(s - dim(V) + 1).
template <class F>
struct PunctureSumReport {
    int dim_v = 0;
    long lhs = 0;
    Rational rhs_bound;
    bool holds = false;
};

template <class F>
PunctureSumReport<F> puncture_sum_bound_check(const LinearCode<F>& code,
                                              const Matrix<F>& subcode_rows) {
    auto v = Subspace<F>::from_spanning(subcode_rows);
    int dv = v.dim();
    if (dv > code.s()) throw std::invalid_argument("puncture_sum_bound_check: dim V > s");
    PunctureSumReport<F> rep;
    rep.dim_v = dv;
    for (int i = 0; i < code.n(); ++i) {
        std::vector<int> cols(code.s());
        for (int j = 0; j < code.s(); ++j) cols[j] = i * code.s() + j;
        rep.lhs += rank(v.basis().columns(cols));
    }
    if (dv == 0) {
        rep.rhs_bound = Rational(0);
    } else {
        rep.rhs_bound = Rational(static_cast<long>(code.n()) * dv) -
                        make_rational(static_cast<long>(dv) * (code.k() - dv), code.s() - dv + 1);
    }
    rep.holds = Rational(rep.lhs) >= rep.rhs_bound;
    return rep;
}

}  // namespace sdlab
