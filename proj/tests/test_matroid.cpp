#include <gtest/gtest.h>

#include "sdlab/tensor_matroid.hpp"

using namespace sdlab;

namespace {

LinearCode<PrimeField> rs(const PrimeField& f, std::initializer_list<i64> pts, int k) {
    std::vector<u64> v;
    for (i64 x : pts) v.push_back(f.from_int(x));
    return rs_code(f, v, k);
}

}  // namespace

TEST(Pattern, BasicsAndScaling) {
    ErasurePattern e(2, 2, {{0, 0}});
    EXPECT_EQ(e.size(), 1u);
    auto scaled = scale_pattern(e, 2, 2);
    EXPECT_EQ(scaled.m, 4);
    EXPECT_EQ(scaled.n, 4);
    EXPECT_EQ(scaled.size(), 4u);
    EXPECT_TRUE(scaled.contains(0, 0));
    EXPECT_TRUE(scaled.contains(0, 1));
    EXPECT_TRUE(scaled.contains(1, 0));
    EXPECT_TRUE(scaled.contains(1, 1));
    EXPECT_FALSE(scaled.contains(0, 2));
    EXPECT_TRUE(scale_pattern(e, 1, 1) == e);
    // |E^{s,t}| = s t |E| and complement commutes with scaling
    for (u64 mask = 0; mask < 512; ++mask) {
        auto p = ErasurePattern::from_mask(3, 3, mask);
        auto sc = scale_pattern(p, 2, 3);
        EXPECT_EQ(sc.size(), 6 * p.size());
        EXPECT_TRUE(scale_pattern(p.complement(), 2, 3) == sc.complement());
    }
    EXPECT_THROW(scale_pattern(e, 0, 1), std::invalid_argument);
    EXPECT_THROW(ErasurePattern(2, 2, {{2, 0}}), std::invalid_argument);
}

TEST(Correctable, EmptyFullAndRectangles) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);  // [3,2], a = 1
    auto c_row = rs(f7, {1, 2, 3}, 2);  // [3,2], b = 1
    EXPECT_TRUE(is_correctable(c_col, c_row, ErasurePattern(3, 3, {})).correctable);
    auto full = ErasurePattern::from_mask(3, 3, 511);
    auto res = is_correctable(c_col, c_row, full);
    EXPECT_FALSE(res.correctable);
    ASSERT_TRUE(res.certificate.has_value());
    EXPECT_TRUE(validate_correctability_certificate(c_col, c_row, full, *res.certificate));
    // MDS factors: A x B minus one cell is correctable
    ErasurePattern rect_minus(3, 3, {{0, 0}, {0, 1}, {1, 0}});
    EXPECT_TRUE(is_correctable(c_col, c_row, rect_minus).correctable);
    ErasurePattern rect(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto res2 = is_correctable(c_col, c_row, rect);
    EXPECT_FALSE(res2.correctable);
    EXPECT_TRUE(validate_correctability_certificate(c_col, c_row, rect, *res2.certificate));
}

TEST(Correctable, DimensionMismatchRejected) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    auto c_row = rs(f7, {1, 2, 3, 4}, 3);
    EXPECT_THROW(is_correctable(c_col, c_row, ErasurePattern(3, 3, {})), std::invalid_argument);
}

TEST(Potential, ClosedFormsAndRectangleValue) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);  // [3,2] MDS, a = 1
    int b = 1;
    auto empty = potential_phi(c_col, b, ErasurePattern(3, 3, {}));
    EXPECT_EQ(empty.phi, 0);
    EXPECT_EQ(empty.maximizer->dim(), 0);
    // full grid: (n-b) dim(C_col)
    auto full = potential_phi(c_col, b, ErasurePattern::from_mask(3, 3, 511));
    EXPECT_EQ(full.phi, (3 - 1) * 2);
    // MDS rectangle A x B with |A| = a+1, |B| = b+1: phi = 1 exactly
    auto rect = potential_phi(c_col, b, ErasurePattern(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(rect.phi, 1);
    EXPECT_EQ(rect.maximizer->dim(), 1);
    EXPECT_EQ(potential_rank(c_col, b, ErasurePattern(3, 3, {})), 0);
    // r(full) = mn - (m-a)(n-b)
    EXPECT_EQ(potential_rank(c_col, b, ErasurePattern::from_mask(3, 3, 511)), 9 - 4);
}

TEST(Potential, RankMonotoneOnChains) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        u64 mask = 0;
        long prev = 0;
        std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7, 8};
        for (int i = 8; i > 0; --i)
            std::swap(order[i], order[static_cast<int>(rng.below(i + 1))]);
        for (int cell : order) {
            mask |= u64(1) << cell;
            long r = potential_rank(c_col, 1, ErasurePattern::from_mask(3, 3, mask));
            EXPECT_GE(r, prev);
            EXPECT_LE(r, prev + 1);
            prev = r;
        }
    }
}

TEST(Potential, RationalCodeRestrictions) {
    RationalField q;
    Matrix<RationalField> ones(q, 1, 2);
    ones.at(0, 0) = 1;
    ones.at(0, 1) = 1;
    LinearCode<RationalField> c(1, 2, 1, ones);
    // k = 1 over Q: subspace lattice is {0, C}, enumerable
    auto res = potential_phi(c, 1, ErasurePattern::from_mask(2, 2, 0xF));
    EXPECT_EQ(res.phi, 1);  // -1 + 2
    auto big = rs_code(q, {Rational(1), Rational(2), Rational(3)}, 2);
    EXPECT_THROW(potential_phi(big, 1, ErasurePattern(3, 3, {})), std::invalid_argument);
}

TEST(AxiomAudit, FreeAndUniformMatroids) {
    auto free_rank = [](const ErasurePattern& e) { return static_cast<long>(e.size()); };
    auto rep = matroid_axiom_audit(free_rank, 2, 3);
    EXPECT_TRUE(rep.passed);
    for (long cap : {0L, 2L, 4L}) {
        auto uniform = [cap](const ErasurePattern& e) {
            return std::min<long>(static_cast<long>(e.size()), cap);
        };
        EXPECT_TRUE(matroid_axiom_audit(uniform, 2, 3).passed);
    }
    auto bad = [](const ErasurePattern& e) {
        return static_cast<long>(e.size() * e.size());
    };
    auto bad_rep = matroid_axiom_audit(bad, 2, 2);
    EXPECT_FALSE(bad_rep.passed);
    EXPECT_FALSE(bad_rep.first_violation.empty());
    EXPECT_THROW(matroid_axiom_audit(free_rank, 5, 5), std::invalid_argument);
}

TEST(AxiomAudit, PotentialRankIsAMatroidRankFunction) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    auto rank_fn = [&](const ErasurePattern& e) { return potential_rank(c_col, 1, e); };
    auto rep = matroid_axiom_audit(rank_fn, 3, 3);
    EXPECT_TRUE(rep.passed) << rep.first_violation;
    EXPECT_EQ(rep.patterns_checked, 512u);
}

TEST(AxiomAudit, PotentialRankOnWiderGridsAndB2) {
    PrimeField f5(5);
    auto c_col = rs(f5, {1, 2, 3}, 2);
    for (int b : {1, 2}) {
        auto rank_fn = [&](const ErasurePattern& e) { return potential_rank(c_col, b, e); };
        EXPECT_TRUE(matroid_axiom_audit(rank_fn, 3, 4).passed);
    }
}

TEST(Oracle, GreedyRankAndExchangeSpotCheck) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    auto c_row = rs(f7, {1, 2, 3}, 2);
    MatroidOracle oracle{3, 3, "tensor-correctability",
                         [&](const ErasurePattern& e) {
                             return is_correctable(c_col, c_row, e).correctable;
                         }};
    EXPECT_EQ(oracle.rank(), 1 * 3 + 1 * 3 - 1);
    std::vector<bool> indep(512);
    for (u64 mask = 0; mask < 512; ++mask)
        indep[mask] = oracle.independent(ErasurePattern::from_mask(3, 3, mask));
    // downward closure
    for (u64 mask = 0; mask < 512; ++mask) {
        if (!indep[mask]) continue;
        u64 sub = mask;
        while (true) {
            EXPECT_TRUE(indep[sub]);
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    // exchange: |B| > |A| independent => some x in B\A augments A
    for (u64 a = 0; a < 512; ++a) {
        if (!indep[a]) continue;
        for (u64 b = 0; b < 512; ++b) {
            if (!indep[b] || __builtin_popcountll(b) <= __builtin_popcountll(a)) continue;
            bool augmented = false;
            u64 diff = b & ~a;
            while (diff && !augmented) {
                u64 bit = diff & (~diff + 1);
                if (indep[a | bit]) augmented = true;
                diff &= diff - 1;
            }
            EXPECT_TRUE(augmented) << "exchange fails for " << a << "," << b;
        }
    }
}

TEST(Birigidity, TensorAndPotentialOraclesPass) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    auto c_row = rs(f7, {1, 2, 3}, 2);
    MatroidOracle tensor{3, 3, "tensor-correctability",
                         [&](const ErasurePattern& e) {
                             return is_correctable(c_col, c_row, e).correctable;
                         }};
    auto rep = abstract_birigidity_audit(tensor, 1, 1);
    EXPECT_TRUE(rep.passed) << rep.first_violation;
    EXPECT_EQ(rep.actual_rank, 5);
    MatroidOracle potential{3, 3, "potential",
                            [&](const ErasurePattern& e) {
                                return potential_rank(c_col, 1, e) ==
                                       static_cast<long>(e.size());
                            }};
    auto rep2 = abstract_birigidity_audit(potential, 1, 1);
    EXPECT_TRUE(rep2.passed) << rep2.first_violation;
}

TEST(Birigidity, DegenerateAEqualsMVacuous) {
    MatroidOracle free_oracle{2, 3, "free", [](const ErasurePattern&) { return true; }};
    auto rep = abstract_birigidity_audit(free_oracle, 2, 0);
    EXPECT_TRUE(rep.passed);
    EXPECT_TRUE(rep.rectangles_vacuous);
    EXPECT_EQ(rep.expected_rank, 0 * 2 + 2 * 3 - 0);
}

TEST(Monotonicity, CorrectableImpliesPotentialIndependent) {
    PrimeField f7(7);
    auto c_col = rs(f7, {1, 2, 3}, 2);
    auto c_row = rs(f7, {1, 2, 3}, 2);
    auto rep = monotonicity_check(c_col, c_row, 1);
    EXPECT_TRUE(rep.passed) << rep.first_violation;
    EXPECT_EQ(rep.patterns_checked, 512u);
    EXPECT_GT(rep.correctable_count, 0u);
}

TEST(Scaling, MarginsEnforced) {
    // (m,n,a,b) = (2,2,1,1): paper values t = 16, d = 4 satisfy the margins
    EXPECT_TRUE(ScalingMargins::hold(2, 2, 1, 16, 4));
    // reduced t = 10, d = 4 holds (4 < 5, 4 > 1); t = 6, d = 4 fails (4 >= 3)
    EXPECT_TRUE(ScalingMargins::hold(2, 2, 1, 10, 4));
    EXPECT_FALSE(ScalingMargins::hold(2, 2, 1, 6, 4));
    RationalField q;
    Matrix<RationalField> ones(q, 1, 2);
    ones.at(0, 0) = 1;
    ones.at(0, 1) = 1;
    LinearCode<RationalField> c(1, 2, 1, ones);
    EXPECT_THROW(scaling_lemma_check(c, 1, ErasurePattern(2, 2, {}), 6, 4), std::invalid_argument);
}

TEST(Scaling, EquivalenceOnAll16PatternsReduced) {
    // C_col = [2,1] over Q, reduced (t, d) = (10, 4): independence in
    // M(C_col, 2, 1) iff E^{1,10} correctable in C_col ⊗ RS row code
    RationalField q;
    Matrix<RationalField> ones(q, 1, 2);
    ones.at(0, 0) = 1;
    ones.at(0, 1) = 1;
    LinearCode<RationalField> c_col(1, 2, 1, ones);
    for (u64 mask = 0; mask < 16; ++mask) {
        auto e = ErasurePattern::from_mask(2, 2, mask);
        auto rep = scaling_lemma_check(c_col, 1, e, 10, 4);
        EXPECT_TRUE(rep.margins_ok);
        EXPECT_EQ(rep.b_prime, 14);
        EXPECT_TRUE(rep.agree) << "mask " << mask;
    }
}

TEST(StandIn, GenericStandinIsDeterministic) {
    auto a = generic_standin_code(3, 1, (1ull << 61) - 1, 42);
    auto b = generic_standin_code(3, 1, (1ull << 61) - 1, 42);
    EXPECT_TRUE(a.generator().equals(b.generator()));
    EXPECT_EQ(a.k(), 2);
}
