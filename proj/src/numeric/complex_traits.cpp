#include "uniton/numeric/complex_traits.hpp"

namespace uniton {

namespace detail {

float128 mpz_to_quad(const mpz_class& z, long& exp2) {
    mpz_class a = abs(z);
    long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    exp2 = 0;
    if (bits > 120) {
        exp2 = bits - 120;
        a >>= static_cast<mp_bitcnt_t>(exp2);
    }
    float128 out = 0;
    // At most 120 bits remain: split into two 60-bit halves.
    mpz_class hi = a >> 60;
    mpz_class lo = a - (hi << 60);
    out = float128(hi.get_ui()) * float128(1ULL << 60) + float128(lo.get_ui());
    return sgn(z) < 0 ? float128(-out) : out;
}

}  // namespace detail

float128 ComplexTraits<cquad>::from_rational(const mpq_class& q) {
    if (sgn(q) == 0) return 0;
    long en = 0, ed = 0;
    float128 n = detail::mpz_to_quad(q.get_num(), en);
    float128 d = detail::mpz_to_quad(q.get_den(), ed);
    float128 r = n / d;
    long e = en - ed;
    if (e != 0) r = boost::multiprecision::ldexp(r, static_cast<int>(e));
    return r;
}

}  // namespace uniton
