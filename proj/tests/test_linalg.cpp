#include <gtest/gtest.h>

#include <random>

#include "uniton/numeric/frame.hpp"

using namespace uniton;

namespace {

ExactMatrix random_exact(std::mt19937_64& rng, size_t rows, size_t cols, long span = 4) {
    std::uniform_int_distribution<long> d(-span, span);
    ExactMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = GaussRat(mpq_class(d(rng)), mpq_class(d(rng)));
    return m;
}

// Random matrix of prescribed rank r as a product of random factors.
ExactMatrix random_rank(std::mt19937_64& rng, size_t rows, size_t cols, size_t r) {
    return random_exact(rng, rows, r) * random_exact(rng, r, cols);
}

bool is_hermitian_idempotent(const ExactMatrix& p) { return p == p.adjoint() && p * p == p; }

}  // namespace

TEST(ExactLinalg, ProjectorOntoSpanOneI) {
    ExactMatrix v(2, 1);
    v(0, 0) = GaussRat(1);
    v(1, 0) = GaussRat::i();
    ExactMatrix p = exact_projector(v, 2);
    ExactMatrix expected(2, 2);
    expected(0, 0) = GaussRat(1, 2);
    expected(0, 1) = GaussRat(0, mpq_class(-1, 2));
    expected(1, 0) = GaussRat(0, mpq_class(1, 2));
    expected(1, 1) = GaussRat(1, 2);
    EXPECT_EQ(p, expected);
}

TEST(ExactLinalg, ProjectorInvariantUnderColumnOperations) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        ExactMatrix a = random_rank(rng, 5, 3, 2);
        ExactMatrix mix = random_exact(rng, 3, 4);
        ExactMatrix p = exact_projector(a, 5);
        EXPECT_TRUE(is_hermitian_idempotent(p));
        EXPECT_EQ(exact_rank(p), exact_rank(a));
        if (exact_rank(a * mix) == exact_rank(a)) {
            EXPECT_EQ(exact_projector(a * mix, 5), p);
        }
        ExactMatrix zero_padded = hstack(a, ExactMatrix(5, 2));
        EXPECT_EQ(exact_projector(zero_padded, 5), p);
    }
}

TEST(ExactLinalg, RankAndKernel) {
    std::mt19937_64 rng(9);
    for (size_t r = 0; r <= 4; ++r) {
        ExactMatrix m = random_rank(rng, 4, 6, r);
        size_t rank = exact_rank(m);
        EXPECT_LE(rank, r);
        ExactMatrix ker = kernel(m);
        EXPECT_EQ(ker.cols(), 6 - rank);
        EXPECT_TRUE(is_zero_matrix(m * ker));
        EXPECT_EQ(exact_rank(ker), ker.cols());
    }
}

TEST(ExactLinalg, ModularLaw) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 30; ++k) {
        const size_t n = 6;
        ExactMatrix shared = random_exact(rng, n, 1 + k % 2);
        ExactMatrix a = hstack(shared, random_exact(rng, n, 1 + k % 3));
        ExactMatrix b = hstack(shared, random_exact(rng, n, 2));
        size_t meet = exact_rank(exact_meet(a, b, n));
        size_t join = exact_rank(exact_join(a, b, n));
        EXPECT_EQ(meet + join, exact_rank(a) + exact_rank(b));
        EXPECT_TRUE(exact_contains(a, exact_meet(a, b, n)));
        EXPECT_TRUE(exact_contains(b, exact_meet(a, b, n)));
    }
}

TEST(ExactLinalg, OrthocomplementAndCanonicalBasis) {
    std::mt19937_64 rng(17);
    const size_t n = 5;
    ExactMatrix a = random_rank(rng, n, 3, 2);
    ExactMatrix c = exact_orthocomplement(a, n);
    EXPECT_EQ(exact_rank(c), n - 2);
    EXPECT_TRUE(is_zero_matrix(a.adjoint() * c));
    EXPECT_EQ(exact_projector(a, n) + exact_projector(c, n), ExactMatrix::identity(n));
    EXPECT_TRUE(exact_same_span(a, a * random_exact(rng, 3, 3)) ||
                exact_rank(a * random_exact(rng, 3, 3)) < 2);
}

TEST(ExactLinalg, Inverse) {
    std::mt19937_64 rng(19);
    ExactMatrix m = random_exact(rng, 4, 4);
    if (exact_rank(m) == 4) {
        EXPECT_EQ(m * exact_inverse(m), ExactMatrix::identity(4));
    }
    EXPECT_THROW(exact_inverse(random_rank(rng, 3, 3, 2)), BadArguments);
}

TEST(FrameOps, MismatchedAmbientRejected) {
    Frame<GaussRat> a{ExactMatrix::identity(3), GaussRat(0)};
    Frame<GaussRat> b{ExactMatrix::identity(4), GaussRat(0)};
    EXPECT_THROW(subspace_meet(a, b), BadArguments);
    Frame<GaussRat> c{ExactMatrix::identity(3), GaussRat(1)};
    EXPECT_THROW(subspace_join(a, c), BadArguments);
}

template <class C>
class FloatLinalg : public ::testing::Test {};
using FloatTypes = ::testing::Types<cdouble, cquad>;
TYPED_TEST_SUITE(FloatLinalg, FloatTypes);

TYPED_TEST(FloatLinalg, AgreesWithExactBackend) {
    using C = TypeParam;
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        size_t r = 1 + k % 4;
        ExactMatrix a = random_rank(rng, 6, 5, r);
        ExactMatrix pe = exact_projector(a, 6);
        Matrix<C> pf = float_projector(to_float<C>(a), 6);
        Matrix<C> diff = pf - to_float<C>(pe);
        EXPECT_LT(static_cast<double>(max_abs_entry(diff)), 1e-10);
        EXPECT_EQ(float_rank(to_float<C>(a)), exact_rank(a));

        ExactMatrix b = random_rank(rng, 6, 4, 3);
        size_t em = exact_rank(exact_meet(a, b, 6));
        EXPECT_EQ(float_rank(float_meet(to_float<C>(a), to_float<C>(b), 6)), em);
        EXPECT_EQ(float_orthocomplement(to_float<C>(a), 6).cols(), 6 - exact_rank(a));
    }
}

TYPED_TEST(FloatLinalg, RankThresholdIsRelative) {
    using C = TypeParam;
    Matrix<C> m(3, 2);
    m(0, 0) = C(1e6);
    m(1, 1) = C(1e-3);  // 1e-9 relative: below the 1e-8 threshold
    EXPECT_EQ(float_rank(m), 1u);
    m(1, 1) = C(1e-1);
    EXPECT_EQ(float_rank(m), 2u);
}

TEST(QuadConversion, RoundsLargeRationals) {
    mpq_class q(mpz_class("123456789012345678901234567890123456789"), mpz_class("3"));
    float128 x = ComplexTraits<cquad>::from_rational(q);
    float128 expected = float128("41152263004115226300411522630041152263");
    EXPECT_LT(static_cast<double>(abs((x - expected) / expected)), 1e-32);
    EXPECT_NEAR(static_cast<double>(ComplexTraits<cquad>::from_rational(mpq_class(1, 3)) * 3), 1.0, 1e-30);
}
