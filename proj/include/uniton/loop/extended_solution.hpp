#pragma once

#include <vector>

#include "uniton/engine/evaluation.hpp"
#include "uniton/numeric/complex_traits.hpp"

namespace uniton {

/// Phi_lambda = (pi_1 + lambda pi_1^perp) ... (pi_r + lambda pi_r^perp) at an evaluated point.
template <class T>
Matrix<T> extended_solution(const ChainPoint<T>& cp, const T& lambda) {
    const Matrix<T> id = Matrix<T>::identity(cp.n);
    Matrix<T> out = id;
    for (size_t l = 1; l <= cp.r; ++l) out = out * (cp.pi[l - 1] + cp.pi_perp(l) * lambda);
    return out;
}

/// T_0 .. T_r with Phi_lambda = sum lambda^j T_j; T_j sums the products with exactly j perp factors.
template <class T>
std::vector<Matrix<T>> polynomial_coefficients(const ChainPoint<T>& cp) {
    std::vector<Matrix<T>> t{Matrix<T>::identity(cp.n)};
    for (size_t l = 1; l <= cp.r; ++l) {
        std::vector<Matrix<T>> next(l + 1, Matrix<T>(cp.n, cp.n));
        for (size_t j = 0; j < l; ++j) {
            next[j] += t[j] * cp.pi[l - 1];
            next[j + 1] += t[j] * cp.pi_perp(l);
        }
        t = std::move(next);
    }
    return t;
}

/// Exact Phi_lambda; lambda must be a Gaussian rational with |lambda| = 1.
ExactMatrix extended_solution_at(const UnitonChain& chain, const GaussRat& z0, const GaussRat& lambda);
Matrix<cquad> extended_solution_at(const UnitonChain& chain, const cquad& z0, const cquad& lambda);

/// max |Phi Phi^* - I|.
template <class C>
double unitarity_residual(const Matrix<C>& phi) {
    return static_cast<double>(max_abs_entry(Matrix<C>(phi * phi.adjoint() - Matrix<C>::identity(phi.rows()))));
}

struct EquationResidual {
    double residual = 0;  // max |Phi^{-1} d_z Phi - (1 - 1/lambda) A_z^psi|
    double scale = 1;     // max(1, max |Phi^{-1} d_z Phi|, max |A_z^psi|)
};

/// Extended-solution equation at (z0, lambda) with psi = Phi_{-1}, derivatives by central differences.
EquationResidual extended_equation_residual(const UnitonChain& chain, const FloatChainData<cquad>& data, const cquad& z0,
                                            const cquad& lambda, double h);

/// Rank of the span of Im T_0 over the given points (n means Im T_0 is full).
size_t t0_image_rank(const UnitonChain& chain, const std::vector<GaussRat>& points);

}  // namespace uniton
