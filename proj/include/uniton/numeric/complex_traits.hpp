#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <gmpxx.h>

#include <complex>
#include <string>

#include "uniton/numeric/gauss_rat.hpp"

namespace uniton {

using cdouble = std::complex<double>;
using float128 = boost::multiprecision::float128;
using cquad = boost::multiprecision::complex128;

template <class C>
struct ComplexTraits;

template <>
struct ComplexTraits<cdouble> {
    using real = double;
    static cdouble make(double re, double im) { return {re, im}; }
    static double from_rational(const mpq_class& q) { return q.get_d(); }
    static const char* name() { return "double"; }
};

namespace detail {
// Approximates an mpz by mantissa * 2^exp with 120 significant bits.
float128 mpz_to_quad(const mpz_class& z, long& exp2);
}  // namespace detail

template <>
struct ComplexTraits<cquad> {
    using real = float128;
    static cquad make(const float128& re, const float128& im) { return cquad(re, im); }
    static float128 from_rational(const mpq_class& q);
    static const char* name() { return "binary128"; }
};

template <class C>
C to_complex(const GaussRat& z) {
    return ComplexTraits<C>::make(ComplexTraits<C>::from_rational(z.re()),
                                  ComplexTraits<C>::from_rational(z.im()));
}

}  // namespace uniton
