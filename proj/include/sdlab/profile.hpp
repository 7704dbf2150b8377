#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdlab/codes.hpp"
#include "sdlab/design.hpp"

namespace sdlab {

// A b-local profile: subspaces V_1..V_n of F_q^b, one per coordinate.
template <class F>
struct LocalProfile {
    int b;
    std::vector<Subspace<F>> spaces;

    int n() const { return static_cast<int>(spaces.size()); }
    const F& field() const { return spaces.at(0).field(); }

    LocalProfile(int b_, std::vector<Subspace<F>> v) : b(b_), spaces(std::move(v)) {
        for (const auto& s : spaces)
            if (s.ambient() != b) throw std::invalid_argument("LocalProfile: ambient mismatch");
        if (spaces.empty()) throw std::invalid_argument("LocalProfile: empty");
    }
};

// U has "distinct rows" iff every coordinate pair i != j is separated by some
// f in U; linear, so checking the basis rows suffices.
template <class F>
bool is_distinct_rows(const Subspace<F>& u) {
    const F& f = u.field();
    int b = u.ambient();
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            bool separated = false;
            for (int r = 0; r < u.dim() && !separated; ++r)
                if (!f.eq(u.basis().at(r, i), u.basis().at(r, j))) separated = true;
            if (!separated) return false;
        }
    return true;
}

// Phi(V, U, R) = -n dim(U) + sum_i dim(V_i ∩ U) + R n dim(U), exact.
template <class F>
Rational potential(const LocalProfile<F>& profile, const Subspace<F>& u, const Rational& r) {
    if (u.ambient() != profile.b) throw std::invalid_argument("potential: ambient mismatch");
    if (r < 0 || r > 1) throw std::invalid_argument("potential: R outside [0,1]");
    long n = profile.n();
    long inter = 0;
    for (const auto& v : profile.spaces) inter += intersection_dim(v, u);
    return Rational(-n * u.dim()) + Rational(inter) + r * Rational(n * u.dim());
}

template <class F>
struct ThresholdResult {
    Rational rate;
    std::optional<Subspace<F>> u_star;  // minimizing distinct-rows subspace
    std::optional<Subspace<F>> w_star;  // its maximizing proper subspace
    bool vacuous = false;               // no dim >= 1 distinct-rows subspace exists
};

// R_V = min over U in L_Dist with dim U >= 1 of max over proper W < U of
//   rho(U, W) = 1 - S / (n (dim U - dim W)),
// where S = sum_i [dim(V_i ∩ U) - dim(V_i ∩ W)].  Each rho is the exact
// crossing rate of Phi(U) - Phi(W) in R, so this min-max is R_V with no
// bisection.  Subspaces with dim 0 are excluded; when no distinct-rows
// subspace of positive dimension exists the result is 1, flagged vacuous.
template <class F>
ThresholdResult<F> threshold_rate(const LocalProfile<F>& profile,
                                  u64 guard = kDefaultSubspaceGuard) {
    const F& f = profile.field();
    int b = profile.b;
    long n = profile.n();
    ThresholdResult<F> out;
    out.rate = Rational(1);
    bool any = false;
    std::vector<int> inter_u(profile.n());
    for (int du = 1; du <= b; ++du) {
        SubspaceRange<F> urange(f, b, du, guard);
        for (u64 ui = 0; ui < urange.size(); ++ui) {
            auto u = urange.at(ui);
            if (!is_distinct_rows(u)) continue;
            long sum_u = 0;
            for (int i = 0; i < profile.n(); ++i) {
                inter_u[i] = intersection_dim(profile.spaces[i], u);
                sum_u += inter_u[i];
            }
            Rational best_rho(-1);
            std::optional<Subspace<F>> best_w;
            for (int dw = 0; dw < du; ++dw) {
                SubspaceRange<F> wrange(f, du, dw, guard);
                for (u64 wi = 0; wi < wrange.size(); ++wi) {
                    auto w = Subspace<F>::from_spanning(wrange.at(wi).basis().mul(u.basis()));
                    long s = 0;
                    for (int i = 0; i < profile.n(); ++i)
                        s += inter_u[i] - intersection_dim(profile.spaces[i], w);
                    long delta = du - dw;
                    Rational rho = Rational(1) - make_rational(s, n * delta);
                    if (rho < 0 || rho > 1) throw std::logic_error("threshold_rate: rho outside [0,1]");
                    if (rho > best_rho) {
                        best_rho = rho;
                        best_w = std::move(w);
                    }
                }
            }
            any = true;
            if (best_rho < out.rate) {
                out.rate = best_rho;
                out.u_star = std::move(u);
                out.w_star = std::move(best_w);
            }
        }
    }
    out.vacuous = !any;
    return out;
}

// V^(s): each V_i repeated s times consecutively, matching the coordinate
// layout of unfolded s-folded codes.
template <class F>
LocalProfile<F> duplicate_profile(const LocalProfile<F>& profile, int s) {
    if (s < 1) throw std::invalid_argument("duplicate_profile: s < 1");
    std::vector<Subspace<F>> v;
    v.reserve(profile.spaces.size() * s);
    for (const auto& sp : profile.spaces)
        for (int j = 0; j < s; ++j) v.push_back(sp);
    return LocalProfile<F>(profile.b, std::move(v));
}

// Witness that a code contains a profile: messages f_1..f_b whose codewords,
// laid out as the columns of M, satisfy the three membership conditions.
// For folded codes everything is stated on the unfolded coordinates against
// the duplicated profile.
template <class F>
struct ContainmentWitness {
    std::vector<std::vector<typename F::Elem>> messages;  // f_1..f_b in F^k
    Matrix<F> m;                                          // N x b, columns are codewords
    Subspace<F> u;                                        // row span of M
    bool trivial = false;                                 // b = 1 all-zero column

    // Independent revalidation of the three witness conditions plus codeword
    // membership of every column.
    bool validate(const LinearCode<F>& code, const LocalProfile<F>& profile) const {
        const F& f = m.field();
        auto unfolded = unfold(code);
        auto dup = code.s() == 1 ? profile : duplicate_profile(profile, code.s());
        int cols = m.cols();
        if (cols != profile.b || m.rows() != unfolded.length()) return false;
        // (1) pairwise distinct columns
        for (int a = 0; a < cols; ++a)
            for (int c = a + 1; c < cols; ++c) {
                bool equal = true;
                for (int i = 0; i < m.rows() && equal; ++i)
                    if (!f.eq(m.at(i, a), m.at(i, c))) equal = false;
                if (equal) return false;
            }
        // (2) every row lies in V_i ∩ U
        for (int i = 0; i < m.rows(); ++i) {
            auto row = m.row(i);
            if (!dup.spaces[i].contains_vec(row)) return false;
            if (!u.contains_vec(row)) return false;
        }
        // (3) the row span of M is U
        if (!Subspace<F>::from_spanning(m).equals(u)) return false;
        // columns are codewords of the unfolded code, and match the messages
        for (int c = 0; c < cols; ++c) {
            auto expect = unfolded.encode(messages[c]);
            for (int i = 0; i < m.rows(); ++i)
                if (!f.eq(m.at(i, c), expect[i])) return false;
        }
        return true;
    }
};

namespace detail {

// Lexicographic odometer over message space indices with incremental
// codeword maintenance: bumping a base-q digit adds (new - old) times the
// corresponding generator row.
template <class F>
class CodewordOdometer {
public:
    CodewordOdometer(const LinearCode<F>& code, u64 q)
        : code_(code), q_(q), digits_(code.k(), 0), word_(code.length(), code.field().zero()) {}

    u64 index() const { return index_; }
    const std::vector<typename F::Elem>& word() const { return word_; }

    std::vector<typename F::Elem> message() const {
        const F& f = code_.field();
        std::vector<typename F::Elem> msg(code_.k());
        for (int i = 0; i < code_.k(); ++i) msg[i] = f.from_index(digits_[i]);
        return msg;
    }

    // Advance to the next message; returns false after the last one.
    bool next() {
        int i = 0;
        while (i < code_.k() && digits_[i] == q_ - 1) {
            apply_delta(i, digits_[i], 0);
            digits_[i] = 0;
            ++i;
        }
        if (i == code_.k()) { index_ = 0; return false; }
        apply_delta(i, digits_[i], digits_[i] + 1);
        ++digits_[i];
        ++index_;
        return true;
    }

    void reset() {
        std::fill(digits_.begin(), digits_.end(), u64(0));
        std::fill(word_.begin(), word_.end(), code_.field().zero());
        index_ = 0;
    }

private:
    void apply_delta(int row, u64 old_idx, u64 new_idx) {
        const F& f = code_.field();
        auto delta = f.sub(f.from_index(new_idx), f.from_index(old_idx));
        if (f.is_zero(delta)) return;
        const auto& gen = code_.generator();
        for (int j = 0; j < code_.length(); ++j)
            word_[j] = f.add(word_[j], f.mul(delta, gen.at(row, j)));
    }

    const LinearCode<F>& code_;
    u64 q_;
    std::vector<u64> digits_;
    std::vector<typename F::Elem> word_;
    u64 index_ = 0;
};

// Per-coordinate membership tables V_i as bitsets over F^b indices, when the
// table fits.
template <class F>
std::optional<std::vector<std::vector<bool>>> membership_tables(const LocalProfile<F>& profile,
                                                               u64 limit = 1 << 20) {
    const F& f = profile.field();
    u64 q = f.order();
    u64 total = 1;
    for (int i = 0; i < profile.b; ++i) {
        if (total > limit / q) return std::nullopt;
        total *= q;
    }
    std::vector<std::vector<bool>> tables(profile.spaces.size(), std::vector<bool>(total, false));
    std::vector<typename F::Elem> vec(profile.b);
    for (u64 v = 0; v < total; ++v) {
        u64 x = v;
        for (int i = 0; i < profile.b; ++i) { vec[i] = f.from_index(x % q); x /= q; }
        for (size_t i = 0; i < profile.spaces.size(); ++i)
            if (profile.spaces[i].contains_vec(vec)) tables[i][v] = true;
    }
    return tables;
}

}  // namespace detail

struct ContainsOptions {
    u64 guard = 100'000'000;     // cap on q^(k b) message tuples
    bool exclude_trivial = false;  // skip the b = 1 all-zero witness
};

// Exhaustive containment search in lexicographic message order (f_b varies
// fastest); returns the first witness or nullopt.  Folded codes are searched
// through their unfolded form against the duplicated profile, which is the
// definition of containment for them.
template <class F>
std::optional<ContainmentWitness<F>> contains_profile(const LinearCode<F>& code,
                                                      const LocalProfile<F>& profile,
                                                      const ContainsOptions& opt = {}) {
    if (profile.n() != code.n()) throw std::invalid_argument("contains_profile: length mismatch");
    const F& f = code.field();
    u64 q = f.order();
    if (q == 0) throw std::invalid_argument("contains_profile: brute force needs a finite field");
    int b = profile.b;
    // guard: q^(k*b) tuples
    Int tuples = 1;
    for (int i = 0; i < code.k() * b; ++i) tuples *= static_cast<unsigned long>(q);
    if (tuples > Int(static_cast<unsigned long>(opt.guard))) throw EnumerationGuardError(tuples);

    auto unfolded = unfold(code);
    auto dup = code.s() == 1 ? profile : duplicate_profile(profile, code.s());
    int len = unfolded.length();
    auto tables = detail::membership_tables(dup);

    std::vector<detail::CodewordOdometer<F>> odo;
    for (int j = 0; j < b; ++j) odo.emplace_back(unfolded, q);

    // strides for packing a row of M into a table index: row index =
    // sum_j idx(M[i][j]) q^j
    std::vector<u64> stride(b, 1);
    for (int j = 1; j < b; ++j) stride[j] = stride[j - 1] * q;

    auto row_ok = [&](int i) {
        if (tables) {
            u64 key = 0;
            for (int j = 0; j < b; ++j) key += f.to_index(odo[j].word()[i]) * stride[j];
            return static_cast<bool>((*tables)[i][key]);
        }
        std::vector<typename F::Elem> row(b);
        for (int j = 0; j < b; ++j) row[j] = odo[j].word()[i];
        return dup.spaces[i].contains_vec(row);
    };

    auto emit_witness = [&]() {
        Matrix<F> m(f, len, b);
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < b; ++j) m.at(i, j) = odo[j].word()[i];
        ContainmentWitness<F> w{{}, m, Subspace<F>::from_spanning(m), false};
        for (int j = 0; j < b; ++j) w.messages.push_back(odo[j].message());
        w.trivial = (b == 1 && odo[0].index() == 0);
        return w;
    };

    // nested lexicographic loops, innermost column fastest
    while (true) {
        // test current tuple
        bool distinct = true;
        for (int a = 0; a < b && distinct; ++a)
            for (int c = a + 1; c < b && distinct; ++c)
                if (odo[a].index() == odo[c].index()) distinct = false;
        bool skip_trivial = opt.exclude_trivial && b == 1 && odo[0].index() == 0;
        if (distinct && !skip_trivial) {
            bool ok = true;
            for (int i = 0; i < len && ok; ++i) ok = row_ok(i);
            if (ok) return emit_witness();
        }
        // advance the tuple odometer (column b-1 fastest)
        int j = b - 1;
        while (j >= 0 && !odo[j].next()) {
            odo[j].reset();
            --j;
        }
        if (j < 0) return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// List recoverability by direct definition.

template <class F>
struct ListRecoveryResult {
    bool recoverable;
    // when false: L+1 distinct codeword messages defeating every list table
    std::vector<std::vector<typename F::Elem>> violating_messages;
};

// True iff no received table S_1..S_n with |S_i| <= ell admits L+1 distinct
// codewords, each disagreeing with the table on at most floor(rho*n)
// coordinates.  Searches (L+1)-subsets of codewords; per subset, a
// coordinate-DP over capped miss-count vectors decides whether some table
// keeps every codeword within budget.
template <class F>
ListRecoveryResult<F> is_list_recoverable(const LinearCode<F>& code, const Rational& rho, int ell,
                                          int L, u64 guard = 2'000'000) {
    const F& f = code.field();
    u64 q = f.order();
    if (q == 0) throw std::invalid_argument("is_list_recoverable: needs a finite field");
    Int words = 1;
    for (int i = 0; i < code.k(); ++i) words *= static_cast<unsigned long>(q);
    if (words > Int(1 << 20)) throw EnumerationGuardError(words);
    u64 total = static_cast<u64>(words.get_ui());
    int tuple = L + 1;
    // subsets count guard
    Int combos = 1;
    for (int i = 0; i < tuple; ++i) combos = combos * (static_cast<long>(total) - i) / (i + 1);
    if (combos > Int(static_cast<unsigned long>(guard))) throw EnumerationGuardError(combos);

    Rational cap_r = rho * Rational(code.n());
    long cap = static_cast<long>(mpz_class(cap_r.get_num() / cap_r.get_den()).get_si());

    // all codewords, as per-position symbols (s-blocks compared by index key)
    std::vector<std::vector<std::vector<u64>>> words_sym(total);
    for (u64 m = 0; m < total; ++m) {
        std::vector<typename F::Elem> msg(code.k());
        u64 x = m;
        for (int i = 0; i < code.k(); ++i) { msg[i] = f.from_index(x % q); x /= q; }
        auto w = code.encode(msg);
        words_sym[m].resize(code.n());
        for (int i = 0; i < code.n(); ++i) {
            std::vector<u64> sym(code.s());
            for (int j = 0; j < code.s(); ++j) sym[j] = f.to_index(w[static_cast<size_t>(i) * code.s() + j]);
            words_sym[m][i] = std::move(sym);
        }
    }

    std::vector<u64> sel(tuple);
    for (int i = 0; i < tuple; ++i) sel[i] = i;
    if (static_cast<u64>(tuple) > total) return {true, {}};

    auto decode_msg = [&](u64 m) {
        std::vector<typename F::Elem> msg(code.k());
        u64 x = m;
        for (int i = 0; i < code.k(); ++i) { msg[i] = f.from_index(x % q); x /= q; }
        return msg;
    };

    while (true) {
        // DP over coordinates: set of feasible capped miss-count vectors
        std::vector<std::vector<long>> states{std::vector<long>(tuple, 0)};
        bool dead = false;
        for (int i = 0; i < code.n() && !dead; ++i) {
            // group tuple members by symbol
            std::vector<int> group(tuple, -1);
            std::vector<std::vector<u64>> symbols;
            for (int t = 0; t < tuple; ++t) {
                const auto& sym = words_sym[sel[t]][i];
                for (size_t g = 0; g < symbols.size(); ++g)
                    if (symbols[g] == sym) { group[t] = static_cast<int>(g); break; }
                if (group[t] < 0) {
                    symbols.push_back(sym);
                    group[t] = static_cast<int>(symbols.size()) - 1;
                }
            }
            int ng = static_cast<int>(symbols.size());
            // choices of which symbol groups the list covers
            std::vector<std::vector<bool>> miss_opts;
            if (ng <= ell) {
                miss_opts.push_back(std::vector<bool>(tuple, false));
            } else {
                std::vector<int> pick(ell);
                for (int t = 0; t < ell; ++t) pick[t] = t;
                while (true) {
                    std::vector<bool> covered(ng, false);
                    for (int t = 0; t < ell; ++t) covered[pick[t]] = true;
                    std::vector<bool> miss(tuple);
                    for (int t = 0; t < tuple; ++t) miss[t] = !covered[group[t]];
                    miss_opts.push_back(std::move(miss));
                    int t = ell - 1;
                    while (t >= 0 && pick[t] == ng - ell + t) --t;
                    if (t < 0) break;
                    ++pick[t];
                    for (int u2 = t + 1; u2 < ell; ++u2) pick[u2] = pick[u2 - 1] + 1;
                }
            }
            std::vector<std::vector<long>> next;
            for (const auto& st : states)
                for (const auto& miss : miss_opts) {
                    std::vector<long> ns = st;
                    bool ok = true;
                    for (int t = 0; t < tuple && ok; ++t) {
                        if (miss[t]) ++ns[t];
                        if (ns[t] > cap) ok = false;
                    }
                    if (ok && std::find(next.begin(), next.end(), ns) == next.end())
                        next.push_back(std::move(ns));
                }
            states = std::move(next);
            dead = states.empty();
        }
        if (!dead) {
            ListRecoveryResult<F> res{false, {}};
            for (int t = 0; t < tuple; ++t) res.violating_messages.push_back(decode_msg(sel[t]));
            return res;
        }
        int i = tuple - 1;
        while (i >= 0 && sel[i] == total - tuple + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < tuple; ++j) sel[j] = sel[j - 1] + 1;
    }
    return {true, {}};
}

// ---------------------------------------------------------------------------
// Monte Carlo experiments.

struct MonteCarloReport {
    u64 trials = 0;
    u64 hits = 0;
    Rational frequency() const { return trials ? make_rational(hits, trials) : Rational(0); }
};

// Containment frequency of seeded random linear codes of rate R = k/n
// against a profile; the b = 1 all-zero witness is excluded so the zero code
// word cannot masquerade as containment.
template <class F>
MonteCarloReport monte_carlo_threshold(const F& field, const LocalProfile<F>& profile,
                                       const Rational& rate, u64 trials, u64 seed,
                                       u64 guard = 100'000'000) {
    long n = profile.n();
    Rational kr = rate * Rational(n);
    if (kr.get_den() != 1) throw std::invalid_argument("monte_carlo_threshold: R*n not integral");
    int k = static_cast<int>(mpz_class(kr.get_num()).get_si());
    if (k < 1 || k > n) throw std::invalid_argument("monte_carlo_threshold: k out of range");
    MonteCarloReport rep;
    rep.trials = trials;
    ContainsOptions opt;
    opt.guard = guard;
    opt.exclude_trivial = true;
    for (u64 t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, t);
        auto rc = random_linear_code(field, static_cast<int>(n), k, rng);
        if (contains_profile(rc.code, profile, opt).has_value()) ++rep.hits;
    }
    return rep;
}

struct RandomDesignReport {
    u64 trials = 0;
    u64 hits = 0;
    double theorem_bound = 0.0;  // 1 - q^(-eps s d n + 3 d^2 n + 3 n)
    Rational frequency() const { return trials ? make_rational(hits, trials) : Rational(0); }
};

// Frequency with which a random s-folded [sn, k] code is (d', (R+eps) d' n)
// subspace designable for all d' <= d, by exhaustive from-code audit.
template <class F>
RandomDesignReport random_design_rate(const F& field, int n, int k, int s, int d,
                                      const Rational& eps, u64 trials, u64 seed,
                                      u64 guard = kDefaultSubspaceGuard) {
    if (d < 1) throw std::invalid_argument("random_design_rate: d >= 1 required");
    if (d >= s) throw std::invalid_argument("random_design_rate: requires d < s");
    RandomDesignReport rep;
    rep.trials = trials;
    Rational rate = make_rational(k, static_cast<long>(s) * n);
    for (u64 t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, t);
        auto rc = random_folded_linear_code(field, n, k, s, rng);
        auto audit = designability_audit(rc.code, d, guard);
        if (is_slacked_designable(audit, eps, rate, n)) ++rep.hits;
    }
    double q = static_cast<double>(field.order());
    double eps_d = eps.get_d();
    double exponent = -eps_d * s * d * n + 3.0 * d * d * n + 3.0 * n;
    rep.theorem_bound = 1.0 - std::pow(q, exponent);
    return rep;
}

}  // namespace sdlab
