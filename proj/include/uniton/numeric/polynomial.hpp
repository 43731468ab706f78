#pragma once

#include <vector>

#include "uniton/numeric/gauss_rat.hpp"

namespace uniton {

/// Polynomial over Q(i); coefficients in ascending order, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussRat> coeffs);
    Poly(const GaussRat& c);  // NOLINT

    static Poly monomial(const GaussRat& c, int degree);
    static Poly z() { return monomial(1, 1); }

    const std::vector<GaussRat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GaussRat& lead() const { return c_.back(); }
    GaussRat coeff(int d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const GaussRat& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; returns quotient, remainder stored in rem.
    Poly divmod(const Poly& d, Poly& rem) const;
    Poly monic() const;
    Poly derivative() const;
    Poly conj_coeffs() const;
    GaussRat operator()(const GaussRat& z) const;

private:
    void trim();
    std::vector<GaussRat> c_;
};

/// Monic gcd (zero if both zero).
Poly gcd(Poly a, Poly b);

}  // namespace uniton
