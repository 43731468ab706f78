#include "uniton/numeric/polynomial.hpp"

#include <stdexcept>

namespace uniton {

Poly::Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const GaussRat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const GaussRat& c, int degree) {
    if (c.is_zero()) return {};
    std::vector<GaussRat> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat Poly::coeff(int d) const {
    if (d < 0 || d > degree()) return {};
    return c_[static_cast<size_t>(d)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::scaled(const GaussRat& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::divmod(const Poly& d, Poly& rem) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    rem = *this;
    if (degree() < d.degree()) return {};
    std::vector<GaussRat> q(static_cast<size_t>(degree() - d.degree()) + 1);
    const GaussRat inv = GaussRat(1) / d.lead();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        GaussRat f = rem.lead() * inv;
        q[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + static_cast<size_t>(shift)] -= f * d.c_[i];
        rem.trim();
    }
    return Poly(std::move(q));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return scaled(GaussRat(1) / lead());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussRat> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * GaussRat(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::conj_coeffs() const {
    Poly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

GaussRat Poly::operator()(const GaussRat& z) const {
    GaussRat acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= z;
        acc += c_[i];
    }
    return acc;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r;
        a.divmod(b, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace uniton
