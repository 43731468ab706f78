#pragma once

#include <utility>

#include "uniton/numeric/complex_traits.hpp"

namespace uniton {

/// Central-difference Wirtinger derivatives {d/dz, d/dzbar} of f at z with step h (four evaluations).
/// f returns anything closed under +, - and scalar multiplication.
template <class C, class F>
auto wirtinger(F&& f, const C& z, const typename ComplexTraits<C>::real& h) {
    using R = typename ComplexTraits<C>::real;
    const C step = ComplexTraits<C>::make(h, R(0));
    const C istep = ComplexTraits<C>::make(R(0), h);
    const R inv = R(1) / (R(4) * h);
    auto dx = f(z + step) - f(z - step);
    auto dy = f(z + istep) - f(z - istep);
    const C a = ComplexTraits<C>::make(inv, R(0)), b = ComplexTraits<C>::make(R(0), inv);
    auto dz = dx * a - dy * b;
    auto dzbar = dx * a + dy * b;
    return std::make_pair(std::move(dz), std::move(dzbar));
}

}  // namespace uniton
