#pragma once

#include <vector>

#include "uniton/numeric/polynomial.hpp"

namespace uniton {

/// Meromorphic function num/den in lowest terms with monic denominator.
class RatFun {
public:
    RatFun() : den_(GaussRat(1)) {}
    RatFun(const GaussRat& c) : num_(c), den_(GaussRat(1)) {}  // NOLINT
    RatFun(Poly num) : num_(std::move(num)), den_(GaussRat(1)) {}  // NOLINT
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    RatFun operator-() const { return RatFun(-num_, den_, true); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun derivative() const;
    /// Throws PoleAtPoint when the denominator vanishes at z.
    GaussRat operator()(const GaussRat& z) const;

private:
    RatFun(Poly num, Poly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    Poly num_;
    Poly den_;
};

/// Column vector of meromorphic functions.
using MeroVector = std::vector<RatFun>;

MeroVector zero_mero(size_t n);
bool is_zero(const MeroVector& v);
MeroVector derivative(const MeroVector& v);
MeroVector operator+(const MeroVector& a, const MeroVector& b);
MeroVector operator-(const MeroVector& a, const MeroVector& b);
MeroVector scale(const RatFun& f, const MeroVector& v);
std::vector<GaussRat> evaluate(const MeroVector& v, const GaussRat& z);

/// Common denominator D (monic lcm) so that D*v is a polynomial vector.
Poly common_denominator(const MeroVector& v);
/// Coefficient vectors of D*v, lowest degree first; each has v.size() entries.
std::vector<std::vector<GaussRat>> coefficient_vectors(const MeroVector& v);

}  // namespace uniton
