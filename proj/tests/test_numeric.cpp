#include <gtest/gtest.h>

#include <random>

#include "uniton/numeric/errors.hpp"
#include "uniton/numeric/gauss_rat.hpp"
#include "uniton/numeric/ratfun.hpp"

using namespace uniton;

namespace {

GaussRat random_gr(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Poly random_poly(std::mt19937_64& rng, int deg) {
    std::vector<GaussRat> c;
    for (int d = 0; d <= deg; ++d) c.push_back(random_gr(rng));
    return Poly(c);
}

}  // namespace

TEST(GaussRat, CanonicalText) {
    EXPECT_EQ(GaussRat(1).str(), "1");
    EXPECT_EQ((-GaussRat::i()).str(), "-i");
    EXPECT_EQ(GaussRat(mpq_class(3, 2), mpq_class(-1, 3)).str(), "3/2-1/3i");
    EXPECT_EQ(GaussRat().str(), "0");
    EXPECT_EQ(GaussRat(0, mpq_class(2)).str(), "2i");
    EXPECT_EQ(GaussRat(mpq_class(-5), mpq_class(1)).str(), "-5+i");
}

TEST(GaussRat, ParseRoundTrip) {
    for (std::string s : {"1", "-i", "3/2-1/3i", "0", "2i", "-5+i", "-7/3", "1/2i", "-1/2-i"}) {
        EXPECT_EQ(GaussRat::parse(s).str(), s) << s;
    }
    EXPECT_EQ(GaussRat::parse("+i"), GaussRat::i());
    EXPECT_EQ(GaussRat::parse("4/6"), GaussRat(2, 3));
    EXPECT_THROW(GaussRat::parse("1/0"), ParseError);
    EXPECT_THROW(GaussRat::parse("i+1"), ParseError);
    EXPECT_THROW(GaussRat::parse("abc"), ParseError);
    EXPECT_THROW(GaussRat::parse(""), ParseError);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        GaussRat z = random_gr(rng);
        EXPECT_EQ(GaussRat::parse(z.str()), z);
    }
}

TEST(GaussRat, FieldAxioms) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        GaussRat a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ((a * a.conj()).im(), 0);
    }
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
}

TEST(RatFun, ReducedForm) {
    Poly z = Poly::z();
    RatFun f(z * z - Poly(GaussRat(1)), (z - Poly(GaussRat(1))).scaled(GaussRat(2)));
    EXPECT_EQ(f.den(), Poly(GaussRat(1)));
    EXPECT_EQ(f.num(), (z + Poly(GaussRat(1))).scaled(GaussRat(1, 2)));
    EXPECT_THROW(RatFun(z, Poly()), DivisionByZeroFunction);
    EXPECT_THROW(RatFun(z) / RatFun(), DivisionByZeroFunction);
}

TEST(RatFun, PoleAtPoint) {
    Poly z = Poly::z();
    RatFun f(Poly(GaussRat(1)), z - Poly(GaussRat::i()));
    EXPECT_THROW(f(GaussRat::i()), PoleAtPoint);
    EXPECT_EQ(f(GaussRat(0)), GaussRat(1) / -GaussRat::i());
}

TEST(RatFun, FieldIdentitiesAndQuotientRule) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 40; ++k) {
        RatFun f(random_poly(rng, 2), random_poly(rng, 1));
        RatFun g(random_poly(rng, 1), random_poly(rng, 2));
        RatFun h(random_poly(rng, 2));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f + g) - g, f);
        if (!g.is_zero()) {
            EXPECT_EQ(f / g * g, f);
        }
        // Leibniz and quotient rules checked against the symbolic derivative.
        EXPECT_EQ((f * g).derivative(), f.derivative() * g + f * g.derivative());
        if (!g.is_zero()) {
            EXPECT_EQ((f / g).derivative(), (f.derivative() * g - f * g.derivative()) / (g * g));
        }
        // Evaluation is a ring homomorphism away from poles.
        GaussRat z0 = random_gr(rng);
        try {
            EXPECT_EQ((f * g)(z0), f(z0) * g(z0));
            EXPECT_EQ((f + g)(z0), f(z0) + g(z0));
        } catch (const PoleAtPoint&) {
        }
    }
}

TEST(RatFun, DerivativeMatchesDifferenceQuotient) {
    // Exact secant slopes at z0 +- t converge to f'(z0) at rate t^2.
    Poly z = Poly::z();
    RatFun f(z * z * z + Poly(GaussRat(2)), z + Poly(GaussRat(3)));
    GaussRat z0(1, 2);
    GaussRat t(1, 100000);
    GaussRat secant = (f(z0 + t) - f(z0 - t)) / (GaussRat(2) * t);
    GaussRat err = secant - f.derivative()(z0);
    EXPECT_LT(err.norm2().get_d(), 1e-12);
}

TEST(MeroVector, CoefficientVectors) {
    Poly z = Poly::z();
    MeroVector v{RatFun(z, z + Poly(GaussRat(1))), RatFun(GaussRat(1))};
    auto coeffs = coefficient_vectors(v);
    // D = z + 1, D v = (z, z + 1).
    ASSERT_EQ(coeffs.size(), 2u);
    EXPECT_EQ(coeffs[0][0], GaussRat(0));
    EXPECT_EQ(coeffs[0][1], GaussRat(1));
    EXPECT_EQ(coeffs[1][0], GaussRat(1));
    EXPECT_EQ(coeffs[1][1], GaussRat(1));
}
