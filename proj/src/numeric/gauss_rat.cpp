#include "uniton/numeric/gauss_rat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "uniton/numeric/errors.hpp"

namespace uniton {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(o.im_) == 0) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (sgn(im_) == 0) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class d = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

std::string GaussRat::str() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out = re_.get_str();
    if (has_im) {
        mpq_class a = abs(im_);
        if (sgn(im_) < 0)
            out += "-";
        else if (has_re)
            out += "+";
        if (a != 1) out += a.get_str();
        out += "i";
    }
    return out;
}

namespace {

// Parses an unsigned rational "a" or "a/b" starting at pos.
bool parse_unsigned_rational(const std::string& s, size_t& pos, mpq_class& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        size_t ds = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == ds) throw ParseError("missing denominator in '" + s + "'");
        den = s.substr(ds, pos - ds);
    }
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    out = mpq_class(mpz_class(num), d);
    out.canonicalize();
    return true;
}

}  // namespace

GaussRat GaussRat::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Gaussian rational");

    mpq_class re = 0, im = 0;
    bool seen_re = false, seen_im = false;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        bool had_sign = false;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            had_sign = true;
            ++pos;
        }
        if (pos > 0 && !had_sign) throw ParseError("malformed '" + raw + "'");
        mpq_class mag;
        bool has_mag = parse_unsigned_rational(s, pos, mag);
        bool imag = pos < s.size() && s[pos] == 'i';
        if (imag) ++pos;
        if (!has_mag && !imag) throw ParseError("malformed '" + raw + "'");
        if (!has_mag) mag = 1;
        if (sign < 0) mag = -mag;
        if (imag) {
            if (seen_im) throw ParseError("two imaginary parts in '" + raw + "'");
            seen_im = true;
            im = mag;
        } else {
            if (seen_re || seen_im) throw ParseError("malformed '" + raw + "'");
            seen_re = true;
            re = mag;
        }
    }
    return GaussRat(re, im);
}

size_t GaussRat::bits() const {
    return std::max({mpz_sizeinbase(re_.get_num_mpz_t(), 2), mpz_sizeinbase(re_.get_den_mpz_t(), 2),
                     mpz_sizeinbase(im_.get_num_mpz_t(), 2), mpz_sizeinbase(im_.get_den_mpz_t(), 2)});
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

}  // namespace uniton
