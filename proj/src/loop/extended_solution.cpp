#include "uniton/loop/extended_solution.hpp"

#include "uniton/numeric/errors.hpp"
#include "uniton/numeric/stencil.hpp"

namespace uniton {

ExactMatrix extended_solution_at(const UnitonChain& chain, const GaussRat& z0, const GaussRat& lambda) {
    if (lambda.norm2() != mpq_class(1)) throw BadArguments("lambda must have modulus one, got " + lambda.str());
    return extended_solution(evaluate_exact(chain, z0), lambda);
}

Matrix<cquad> extended_solution_at(const UnitonChain& chain, const cquad& z0, const cquad& lambda) {
    FloatChainData<cquad> data(chain);
    return extended_solution(evaluate_chain<cquad>(chain, z0, data.values(z0)), lambda);
}

EquationResidual extended_equation_residual(const UnitonChain& chain, const FloatChainData<cquad>& data, const cquad& z0,
                                            const cquad& lambda, double h) {
    auto phi_at = [&](const cquad& lam) {
        return [&, lam](const cquad& z) { return extended_solution(evaluate_chain<cquad>(chain, z, data.values(z)), lam); };
    };
    const cquad minus_one(-1);
    Matrix<cquad> phi = phi_at(lambda)(z0);
    Matrix<cquad> psi = phi_at(minus_one)(z0);
    auto dphi = wirtinger<cquad>(phi_at(lambda), z0, float128(h)).first;
    auto dpsi = wirtinger<cquad>(phi_at(minus_one), z0, float128(h)).first;
    Matrix<cquad> lhs = phi.adjoint() * dphi;
    Matrix<cquad> az = psi.adjoint() * dpsi * cquad(0.5);
    Matrix<cquad> e = lhs - az * (cquad(1) - cquad(1) / lambda);
    EquationResidual out;
    out.residual = static_cast<double>(max_abs_entry(e));
    out.scale = std::max({1.0, static_cast<double>(max_abs_entry(lhs)), static_cast<double>(max_abs_entry(az))});
    return out;
}

size_t t0_image_rank(const UnitonChain& chain, const std::vector<GaussRat>& points) {
    ExactMatrix acc(chain.n(), 0);
    for (const auto& z : points) acc = hstack(acc, polynomial_coefficients(evaluate_exact(chain, z)).front());
    return exact_rank(acc);
}

}  // namespace uniton
