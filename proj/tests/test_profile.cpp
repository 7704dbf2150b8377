#include <gtest/gtest.h>

#include "sdlab/profile.hpp"

using namespace sdlab;

namespace {

template <class F>
Subspace<F> span_rows(const F& f, std::vector<std::vector<i64>> rows, int ambient) {
    Matrix<F> m(f, static_cast<int>(rows.size()), ambient);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = f.from_int(rows[i][j]);
    return Subspace<F>::from_spanning(m);
}

template <class F>
LocalProfile<F> full_profile(const F& f, int b, int n) {
    std::vector<Subspace<F>> v(n, Subspace<F>::full(f, b));
    return LocalProfile<F>(b, std::move(v));
}

template <class F>
LocalProfile<F> zero_profile(const F& f, int b, int n) {
    std::vector<Subspace<F>> v(n, Subspace<F>::zero(f, b));
    return LocalProfile<F>(b, std::move(v));
}

template <class F>
LocalProfile<F> random_profile(const F& f, int b, int n, Rng& rng, int max_dim) {
    std::vector<Subspace<F>> v;
    for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(rng.below(max_dim + 1));
        v.push_back(d == 0 ? Subspace<F>::zero(f, b) : random_subspace(f, b, d, rng));
    }
    return LocalProfile<F>(b, std::move(v));
}

}  // namespace

TEST(DistinctRows, BasicCases) {
    PrimeField f3(3);
    EXPECT_TRUE(is_distinct_rows(Subspace<PrimeField>::full(f3, 3)));
    EXPECT_FALSE(is_distinct_rows(Subspace<PrimeField>::zero(f3, 2)));
    // b = 1: vacuously distinct, even for the zero subspace
    EXPECT_TRUE(is_distinct_rows(Subspace<PrimeField>::zero(f3, 1)));
    // span{(1,1,0),(0,0,1)}: coordinates 1,2 never separated
    auto s = span_rows(f3, {{1, 1, 0}, {0, 0, 1}}, 3);
    EXPECT_FALSE(is_distinct_rows(s));
    auto t = span_rows(f3, {{1, 2, 0}, {0, 0, 1}}, 3);
    EXPECT_TRUE(is_distinct_rows(t));
}

TEST(Potential, ClosedForms) {
    PrimeField f3(3);
    int b = 2, n = 4;
    auto full = full_profile(f3, b, n);
    auto zero = zero_profile(f3, b, n);
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        int d = static_cast<int>(rng.below(3));
        auto u = d == 0 ? Subspace<PrimeField>::zero(f3, b) : random_subspace(f3, b, d, rng);
        Rational r = make_rational(static_cast<long>(rng.below(5)), 4);
        if (u.dim() == 0) {
            EXPECT_EQ(potential(full, u, r), Rational(0));
            EXPECT_EQ(potential(zero, u, r), Rational(0));
        }
        // all V_i full: Phi = R n dim U;  all V_i zero: Phi = (R-1) n dim U
        EXPECT_EQ(potential(full, u, r), r * Rational(n * u.dim()));
        EXPECT_EQ(potential(zero, u, r), (r - 1) * Rational(n * u.dim()));
    }
}

TEST(Threshold, ExtremeProfiles) {
    PrimeField f3(3);
    auto full = full_profile(f3, 2, 4);
    auto res_full = threshold_rate(full);
    EXPECT_EQ(res_full.rate, Rational(0));
    EXPECT_FALSE(res_full.vacuous);
    auto zero = zero_profile(f3, 2, 4);
    EXPECT_EQ(threshold_rate(zero).rate, Rational(1));
}

TEST(Threshold, WeightProfileClosedForm) {
    // b = 1, V_i = F_q for i <= w and 0 otherwise: R_V = 1 - w/n
    PrimeField f2(2);
    for (int n : {4, 7, 10})
        for (int w = 0; w <= n; ++w) {
            std::vector<Subspace<PrimeField>> v;
            for (int i = 0; i < n; ++i)
                v.push_back(i < w ? Subspace<PrimeField>::full(f2, 1)
                                  : Subspace<PrimeField>::zero(f2, 1));
            LocalProfile<PrimeField> prof(1, std::move(v));
            auto res = threshold_rate(prof);
            EXPECT_EQ(res.rate, Rational(1) - make_rational(w, n));
        }
}

TEST(Threshold, MonotoneCrossingCoefficient) {
    PrimeField f3(3);
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        auto prof = random_profile(f3, 2, 4, rng, 2);
        auto u = random_subspace(f3, 2, 2, rng);
        auto w = random_subspace(f3, 2, 1, rng);
        auto diff_at = [&](const Rational& r) {
            return potential(prof, u, r) - potential(prof, w, r);
        };
        EXPECT_LE(diff_at(Rational(0)), diff_at(Rational(1)));
    }
}

TEST(Threshold, DuplicationInvariance) {
    PrimeField f3(3);
    Rng rng(2025);
    int done = 0;
    while (done < 50) {
        int n = 2 + static_cast<int>(rng.below(5));  // n <= 6
        auto prof = random_profile(f3, 2, n, rng, 2);
        auto base = threshold_rate(prof);
        for (int s : {2, 3}) {
            auto dup = duplicate_profile(prof, s);
            EXPECT_EQ(dup.n(), s * n);
            EXPECT_EQ(threshold_rate(dup).rate, base.rate);
        }
        // potential scales by s on random (U, R)
        auto u = random_subspace(f3, 2, 1 + static_cast<int>(rng.below(2)), rng);
        Rational r = make_rational(static_cast<long>(rng.below(4)), 3);
        EXPECT_EQ(potential(duplicate_profile(prof, 3), u, r), Rational(3) * potential(prof, u, r));
        ++done;
    }
}

TEST(Threshold, DuplicationInvarianceAtS5) {
    PrimeField f3(3);
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        auto prof = random_profile(f3, 2, 3, rng, 2);
        EXPECT_EQ(threshold_rate(duplicate_profile(prof, 5)).rate, threshold_rate(prof).rate);
    }
}

TEST(Contains, SmallCodeCannotProduceRequiredColumns) {
    PrimeField f2(2);
    Matrix<PrimeField> g(f2, 1, 3);
    for (int j = 0; j < 3; ++j) g.at(0, j) = 1;
    LinearCode<PrimeField> rep(1, 3, 1, g);
    // V_i = span{(1,0)}: needs second column zero but first nonzero somewhere,
    // while both must be distinct codewords of the repetition code: the only
    // choice is c1 = all-ones, c2 = 0, giving rows (1,0) in V_i -- so a witness
    // exists; flip to V_i = span{(1,1)} and rows of distinct columns fail.
    std::vector<Subspace<PrimeField>> v(3, span_rows(f2, {{1, 1}}, 2));
    LocalProfile<PrimeField> prof(2, std::move(v));
    EXPECT_FALSE(contains_profile(rep, prof).has_value());
    std::vector<Subspace<PrimeField>> v2(3, span_rows(f2, {{1, 0}}, 2));
    LocalProfile<PrimeField> prof2(2, std::move(v2));
    auto w = contains_profile(rep, prof2);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->validate(rep, prof2));
}

TEST(Contains, TrivialZeroWitnessForB1) {
    PrimeField f3(3);
    Rng rng(4);
    auto rc = random_linear_code(f3, 4, 2, rng);
    std::vector<Subspace<PrimeField>> v(4, Subspace<PrimeField>::zero(f3, 1));
    LocalProfile<PrimeField> prof(1, std::move(v));
    auto w = contains_profile(rc.code, prof);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->trivial);
    EXPECT_TRUE(w->validate(rc.code, prof));
    ContainsOptions opt;
    opt.exclude_trivial = true;
    EXPECT_FALSE(contains_profile(rc.code, prof, opt).has_value());
}

TEST(Contains, FullCodeFullProfileHasWitness) {
    PrimeField f3(3);
    auto code = rs_code(f3, {0, 1, 2}, 3);  // all of F_3^3
    auto prof = full_profile(f3, 2, 3);
    auto w = contains_profile(code, prof);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->validate(code, prof));
    EXPECT_FALSE(w->trivial);
}

TEST(Contains, WitnessValidatesAndIsLexFirst) {
    PrimeField f2(2);
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        auto rc = random_linear_code(f2, 5, 3, rng);
        auto prof = random_profile(f2, 2, 5, rng, 2);
        auto w = contains_profile(rc.code, prof);
        if (!w) continue;
        EXPECT_TRUE(w->validate(rc.code, prof));
        u64 found_a = 0, found_b = 0;
        for (int i = 0; i < 3; ++i) {
            found_a += f2.to_index(w->messages[0][i]) << i;
            found_b += f2.to_index(w->messages[1][i]) << i;
        }
        u64 rank_found = found_a * 8 + found_b;
        bool earlier = false;
        for (u64 a = 0; a < 8 && !earlier; ++a)
            for (u64 b = 0; b < 8 && !earlier; ++b) {
                if (a * 8 + b >= rank_found) break;
                if (a == b) continue;
                std::vector<u64> ma(3), mb(3);
                for (int i = 0; i < 3; ++i) { ma[i] = (a >> i) & 1; mb[i] = (b >> i) & 1; }
                auto ca = rc.code.encode(ma), cb = rc.code.encode(mb);
                bool ok = true;
                for (int i = 0; i < 5 && ok; ++i)
                    ok = prof.spaces[i].contains_vec({ca[i], cb[i]});
                if (ok) earlier = true;
            }
        EXPECT_FALSE(earlier);
    }
}

TEST(Contains, FoldedMatchesUnfoldedDuplicated) {
    PrimeField f3(3);
    Rng rng(14);
    for (int t = 0; t < 8; ++t) {
        auto rc = random_folded_linear_code(f3, 2, 2, 2, rng);
        auto prof = random_profile(f3, 2, 2, rng, 2);
        auto via_folded = contains_profile(rc.code, prof);
        auto via_unfolded = contains_profile(unfold(rc.code), duplicate_profile(prof, 2));
        EXPECT_EQ(via_folded.has_value(), via_unfolded.has_value());
        if (via_folded) EXPECT_TRUE(via_folded->m.equals(via_unfolded->m));
    }
}

TEST(Contains, GuardRefusesHugeSearch) {
    PrimeField f13(13);
    Rng rng(1);
    auto rc = random_linear_code(f13, 8, 8, rng);
    auto prof = full_profile(f13, 3, 8);
    ContainsOptions opt;
    opt.guard = 1000;
    EXPECT_THROW(contains_profile(rc.code, prof, opt), EnumerationGuardError);
}

TEST(ListRecovery, TrivialCasesAndDistanceEquivalence) {
    PrimeField f3(3);
    Matrix<PrimeField> g(f3, 1, 4);
    for (int j = 0; j < 4; ++j) g.at(0, j) = 1;
    LinearCode<PrimeField> rep(1, 4, 1, g);
    // L >= |C| - 1: always true
    EXPECT_TRUE(is_list_recoverable(rep, Rational(0), 1, 2).recoverable);
    // rho = 1 and |C| > L: false
    auto res = is_list_recoverable(rep, Rational(1), 1, 1);
    EXPECT_FALSE(res.recoverable);
    EXPECT_EQ(res.violating_messages.size(), 2u);
    // (rho=0, ell=1, L=1): true iff distance > 0
    EXPECT_TRUE(is_list_recoverable(rep, Rational(0), 1, 1).recoverable);
}

TEST(ListRecovery, MatchesBruteForceOnSmallCode) {
    PrimeField f3(3);
    auto c = rs_code(f3, {0, 1, 2}, 2);
    auto res = is_list_recoverable(c, make_rational(1, 3), 1, 1);
    // brute force: each codeword may miss its (size-1) list on at most
    // floor(n/3) = 1 coordinate, so a pair defeats recovery iff it disagrees
    // on <= 2 coordinates
    bool bad = false;
    for (u64 a = 0; a < 9 && !bad; ++a)
        for (u64 b2 = a + 1; b2 < 9 && !bad; ++b2) {
            std::vector<u64> ma{a % 3, a / 3}, mb{b2 % 3, b2 / 3};
            auto ca = c.encode(ma), cb = c.encode(mb);
            int d = 0;
            for (int i = 0; i < 3; ++i) d += (ca[i] != cb[i]);
            if (d <= 2) bad = true;
        }
    EXPECT_EQ(res.recoverable, !bad);
}

TEST(MonteCarlo, WeightProfilePhaseTransition) {
    PrimeField f2(2);
    std::vector<Subspace<PrimeField>> v;
    for (int i = 0; i < 10; ++i)
        v.push_back(i < 5 ? Subspace<PrimeField>::full(f2, 1) : Subspace<PrimeField>::zero(f2, 1));
    LocalProfile<PrimeField> prof(1, std::move(v));
    EXPECT_EQ(threshold_rate(prof).rate, make_rational(1, 2));
    auto high = monte_carlo_threshold(f2, prof, make_rational(8, 10), 50, 11);
    auto low = monte_carlo_threshold(f2, prof, make_rational(2, 10), 50, 11);
    EXPECT_GE(high.frequency(), make_rational(9, 10));
    EXPECT_LE(low.frequency(), make_rational(1, 10));
}

TEST(MonteCarlo, ZeroProfileNeverContainedNontrivially) {
    PrimeField f2(2);
    std::vector<Subspace<PrimeField>> v(6, Subspace<PrimeField>::zero(f2, 1));
    LocalProfile<PrimeField> prof(1, std::move(v));
    auto rep = monte_carlo_threshold(f2, prof, make_rational(3, 6), 30, 5);
    EXPECT_EQ(rep.hits, 0u);
}

TEST(RandomDesign, FrequencyAndPreconditions) {
    PrimeField f3(3);
    EXPECT_THROW(random_design_rate(f3, 2, 2, 3, 3, make_rational(1, 10), 5, 1),
                 std::invalid_argument);  // d >= s refused
    EXPECT_THROW(random_design_rate(f3, 2, 2, 3, 0, make_rational(1, 10), 5, 1),
                 std::invalid_argument);  // d >= 1 enforced
    auto rep = random_design_rate(f3, 2, 2, 3, 1, make_rational(1, 10), 40, 3);
    EXPECT_EQ(rep.trials, 40u);
    if (rep.theorem_bound > 0)
        EXPECT_GE(rep.frequency().get_d(), rep.theorem_bound);
}

TEST(Witness, TamperedWitnessFailsValidation) {
    PrimeField f3(3);
    auto code = rs_code(f3, {0, 1, 2}, 3);
    auto prof = full_profile(f3, 2, 3);
    auto w = contains_profile(code, prof);
    ASSERT_TRUE(w.has_value());
    auto bad = *w;
    bad.m.at(0, 0) = f3.add(bad.m.at(0, 0), 1);
    EXPECT_FALSE(bad.validate(code, prof));
}
