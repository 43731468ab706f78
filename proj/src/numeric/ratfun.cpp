#include "uniton/numeric/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "uniton/numeric/errors.hpp"

namespace uniton {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction("zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussRat(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            Poly r;
            num_ = num_.divmod(g, r);
            den_ = den_.divmod(g, r);
        }
    }
    GaussRat lead = den_.lead();
    if (lead != GaussRat(1)) {
        GaussRat inv = GaussRat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw DivisionByZeroFunction("division by the zero function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFun RatFun::derivative() const {
    if (is_polynomial()) return RatFun(num_.derivative().scaled(GaussRat(1) / den_.lead()));
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GaussRat RatFun::operator()(const GaussRat& z) const {
    GaussRat d = den_(z);
    if (d.is_zero()) throw PoleAtPoint("pole at z = " + z.str());
    GaussRat n = num_(z);
    if (n.is_zero()) return {};
    return n / d;
}

MeroVector zero_mero(size_t n) { return MeroVector(n); }

bool is_zero(const MeroVector& v) {
    for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

MeroVector derivative(const MeroVector& v) {
    MeroVector out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.derivative());
    return out;
}

MeroVector operator+(const MeroVector& a, const MeroVector& b) {
    if (a.size() != b.size()) throw BadArguments("vector length mismatch");
    MeroVector out = a;
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) out[i] += b[i];
    return out;
}

MeroVector operator-(const MeroVector& a, const MeroVector& b) {
    if (a.size() != b.size()) throw BadArguments("vector length mismatch");
    MeroVector out = a;
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) out[i] -= b[i];
    return out;
}

MeroVector scale(const RatFun& f, const MeroVector& v) {
    MeroVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.is_zero() ? RatFun() : f * x);
    return out;
}

std::vector<GaussRat> evaluate(const MeroVector& v, const GaussRat& z) {
    std::vector<GaussRat> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f(z));
    return out;
}

Poly common_denominator(const MeroVector& v) {
    Poly d(GaussRat(1));
    for (const auto& f : v) {
        if (f.den().degree() <= 0) continue;
        Poly g = gcd(d, f.den());
        Poly r;
        d = d * f.den().divmod(g, r);
    }
    return d.monic();
}

std::vector<std::vector<GaussRat>> coefficient_vectors(const MeroVector& v) {
    Poly d = common_denominator(v);
    std::vector<Poly> polys;
    int deg = -1;
    for (const auto& f : v) {
        Poly r, q = (f.num() * d).divmod(f.den(), r);
        if (!r.is_zero()) throw std::logic_error("common denominator does not clear");
        deg = std::max(deg, q.degree());
        polys.push_back(std::move(q));
    }
    std::vector<std::vector<GaussRat>> out(static_cast<size_t>(deg + 1), std::vector<GaussRat>(v.size()));
    for (size_t c = 0; c < polys.size(); ++c)
        for (int e = 0; e <= polys[c].degree(); ++e) out[static_cast<size_t>(e)][c] = polys[c].coeff(e);
    return out;
}

}  // namespace uniton
