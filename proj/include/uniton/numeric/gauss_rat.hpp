#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace uniton {

/// Exact element of Q(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}  // NOLINT
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussRat(long num, long den) : re_(num, den) { re_.canonicalize(); }

    static GaussRat i() { return GaussRat(0, mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Canonical text, e.g. "3/2-1/3i", "-i", "0".
    std::string str() const;
    static GaussRat parse(const std::string& text);

    /// Bit size of the largest numerator/denominator, a rough cost measure.
    size_t bits() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline GaussRat conj(const GaussRat& z) { return z.conj(); }
inline bool is_zero(const GaussRat& z) { return z.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace uniton
