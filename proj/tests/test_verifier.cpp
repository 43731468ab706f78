#include <gtest/gtest.h>

#include "uniton/engine/random_data.hpp"
#include "uniton/io/presets.hpp"
#include "uniton/verify/differential.hpp"
#include "uniton/verify/exact_checks.hpp"

using namespace uniton;

namespace {

UnitonChain random_chain(std::uint64_t seed, size_t n, size_t k, size_t r) {
    RandomArrayOptions o;
    o.n = n;
    o.k = k;
    o.r = r;
    o.active_columns = 3;
    o.degree = 2;
    return build_chain(random_f0_array(seed, o), 1);
}

bool detail_contains(const CheckReport& r, const std::string& text) {
    for (const auto& d : r.details)
        if (d.find(text) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST(ExactChecks, ValidChainsPassEverywhere) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        UnitonChain c = random_chain(seed, 4 + seed % 3, seed % 4, 2 + seed % 2);
        const auto& pts = c.profile()->points;
        ASSERT_EQ(pts.size(), 8u);
        for (size_t i = 0; i <= c.r(); ++i) {
            EXPECT_TRUE(check_unitary_involution(c, i, pts).pass) << seed << " " << i;
            EXPECT_TRUE(check_sij_images(c, i, pts).pass) << seed << " " << i;
        }
        for (size_t i = 0; i < c.r(); ++i) EXPECT_TRUE(check_splitting(c, i, pts).pass) << seed << " " << i;
        CheckReport b = check_backend_consistency(c, pts);
        EXPECT_TRUE(b.pass);
        EXPECT_LE(b.max_residual(), 1e-9);
    }
}

TEST(ExactChecks, ConstantFactorPasses) {
    UnitonChain c = random_chain(7, 5, 2, 2);
    CheckReport r = check_unitary_involution(c, 0, c.profile()->points);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.backend, "exact");
    EXPECT_EQ(r.points.size(), 8u);
}

TEST(ExactChecks, BrokenPatternFailsInvolutionNotUnitarity) {
    UnitonChain c = preset("broken-pattern").build();
    const auto& pts = c.profile()->points;
    EXPECT_TRUE(check_unitary_involution(c, 1, pts).pass);
    CheckReport r = check_unitary_involution(c, 2, pts);
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(detail_contains(r, "unitary=yes"));
    EXPECT_FALSE(detail_contains(r, "unitary=no"));
    EXPECT_TRUE(detail_contains(r, "hermitian=no"));
    EXPECT_TRUE(check_splitting(c, 0, pts).pass);
    EXPECT_FALSE(check_splitting(c, 1, pts).pass);
}

TEST(ExactChecks, TrivialF0GivesNestedUnitons) {
    UnitonChain c = preset("g2c5-case-a").build();
    const auto& pts = c.profile()->points;
    for (size_t i = 0; i < c.r(); ++i) EXPECT_TRUE(check_splitting(c, i, pts).pass);
    for (const auto& z : pts) {
        ChainPoint<GaussRat> cp = evaluate_exact(c, z);
        EXPECT_TRUE(exact_contains(cp.alpha_basis[1], cp.alpha_basis[0]));
        EXPECT_TRUE(exact_contains(cp.alpha_basis[2], cp.alpha_basis[1]));
    }
}

TEST(ExactChecks, SijBaseCase) {
    UnitonChain c = random_chain(3, 5, 2, 2);
    // Oracle: pi_1 pi_F0 e_m in F_1 and pi_1^perp pi_F0 e_m in F_1^perp, by direct arithmetic.
    for (const auto& z : c.profile()->points) {
        ChainPoint<GaussRat> cp = evaluate_exact(c, z);
        ExactMatrix f1 = f_chain(cp)[1].columns;
        ExactMatrix f1perp = exact_orthocomplement(f1, c.n());
        ExactMatrix a = cp.pi[0] * cp.f0_effective();
        ExactMatrix b = (ExactMatrix::identity(c.n()) - cp.pi[0]) * cp.f0_effective();
        EXPECT_TRUE(exact_contains(f1, a));
        EXPECT_TRUE(exact_contains(f1perp, b));
    }
    EXPECT_TRUE(check_sij_images(c, 1, c.profile()->points).pass);
}

TEST(Differential, HolomorphicUnitonAndConstantMap) {
    UnitonChain c = preset("g2c5-case-a").build();
    FloatModel m(c);
    auto pts = float_sample_points(m, 2, 1);
    CheckReport u = check_uniton_conditions(m, 0, pts);
    EXPECT_TRUE(u.pass);
    EXPECT_TRUE(u.contraction);
    EXPECT_LE(u.max_residual(), 1e-6);
    CheckReport h0 = check_harmonicity(m, 0, pts);
    EXPECT_TRUE(h0.pass);
    EXPECT_EQ(h0.max_residual(), 0.0);
    CheckReport h1 = check_harmonicity(m, 1, pts);
    EXPECT_TRUE(h1.pass);
    EXPECT_TRUE(h1.contraction);
}

TEST(Differential, AntiHolomorphicSectionFails) {
    UnitonChain c = random_chain(2, 3, 1, 1);
    FloatModel m(c);
    m.inject_sections(0, [](const cquad& z) {
        Matrix<cquad> s(3, 1);
        s(0, 0) = conj(z);
        return s;
    });
    std::vector<cquad> pts = {cquad(0.5, 0.25), cquad(-1, 0.75)};
    CheckReport r = check_uniton_conditions(m, 0, pts);
    EXPECT_FALSE(r.pass);
    EXPECT_GE(r.max_residual(), 1e-2);
    // The stock chain passes the same check.
    FloatModel clean(c);
    EXPECT_TRUE(check_uniton_conditions(clean, 0, float_sample_points(clean, 2, 2)).pass);
}

TEST(Differential, U3ShiftIdentity) {
    // alpha_2 column 1: A_z^{phi_1}(H_01) = -pi_1^perp H_01^(1).
    UnitonChain c = preset("u3-example").build();
    FloatModel m(c);
    auto pts = float_sample_points(m, 3, 4);
    CheckReport r = check_shift_identity(m, 1, pts);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.contraction);
    EXPECT_LE(r.max_residual(), 1e-6);
    // Vacuous for i = 0.
    EXPECT_TRUE(check_shift_identity(m, 0, pts).pass);
}

TEST(Differential, RandomChainFullSuite) {
    UnitonChain c = random_chain(11, 6, 3, 3);
    FloatModel m(c);
    auto pts = float_sample_points(m, 2, 11);
    for (size_t i = 0; i < c.r(); ++i) {
        for (const CheckReport& r : {check_uniton_conditions(m, i, pts), check_shift_identity(m, i, pts),
                                     check_split_holomorphicity(m, i, pts)}) {
            EXPECT_TRUE(r.pass) << r.check << " " << i;
            EXPECT_TRUE(r.contraction) << r.check << " " << i;
        }
    }
    for (size_t i = 0; i <= c.r(); ++i) EXPECT_TRUE(check_harmonicity(m, i, pts).pass) << i;
    CheckReport ic = check_interchange(m, pts);
    EXPECT_TRUE(ic.applicable);
    EXPECT_TRUE(ic.pass);
    EXPECT_TRUE(ic.contraction);
    EXPECT_LE(accumulated_vs_direct(m, c.r(), pts[0], 1e-5), 1e-8);
}

TEST(Differential, ResidualsContractSecondOrder) {
    UnitonChain c = preset("g2c5-case-b").build();
    FloatModel m(c);
    auto pts = float_sample_points(m, 2, 5);
    CheckReport r = check_harmonicity(m, 2, pts);
    ASSERT_EQ(r.residuals.size(), 2u);
    for (size_t p = 0; p < 2; ++p) {
        ASSERT_GT(r.residuals[p], 1e-16);
        double ratio = r.residuals[p] / r.residuals_half[p];
        EXPECT_GT(ratio, 3.3);
        EXPECT_LT(ratio, 4.7);
    }
}

TEST(Differential, HugeStepRaises) {
    UnitonChain c = preset("g2c5-case-b").build();
    FloatModel m(c);
    auto pts = float_sample_points(m, 1, 5, 2, 0.5);
    DiffOptions d;
    d.h = 0.5;
    EXPECT_THROW(check_harmonicity(m, 2, pts, d), StepTooLarge);
}

TEST(Differential, RawDataSkipsGrassmannianChecks) {
    UnitonChain c = preset("broken-pattern").build();
    FloatModel m(c);
    auto pts = float_sample_points(m, 1, 3);
    EXPECT_FALSE(check_interchange(m, pts).applicable);
    EXPECT_FALSE(check_split_holomorphicity(m, 0, pts).applicable);
    // Any constant Q keeps harmonicity.
    EXPECT_TRUE(check_harmonicity(m, 2, pts).pass);
}
