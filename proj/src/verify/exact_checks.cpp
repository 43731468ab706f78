#include "uniton/verify/exact_checks.hpp"

#include <algorithm>
#include <sstream>

#include "uniton/engine/evaluation.hpp"
#include "uniton/numeric/errors.hpp"

namespace uniton {

double CheckReport::max_residual() const {
    double m = 0;
    for (double r : residuals) m = std::max(m, r);
    for (double r : residuals_half) m = std::max(m, r);
    return m;
}

void CheckReport::fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
}

CheckReport CheckReport::not_applicable(std::string check, std::string backend, std::string why) {
    CheckReport r;
    r.check = std::move(check);
    r.backend = std::move(backend);
    r.applicable = false;
    r.details.push_back(std::move(why));
    return r;
}

namespace {

CheckReport exact_report(const char* name) {
    CheckReport r;
    r.check = name;
    r.backend = "exact";
    return r;
}

// Runs body at each point; evaluation faults count as failures at that point.
template <class Body>
void for_points(CheckReport& rep, const std::vector<GaussRat>& points, Body body) {
    for (const auto& z : points) {
        rep.points.push_back(z.str());
        bool ok = false;
        try {
            ok = body(z);
        } catch (const Error& e) {
            rep.details.push_back(z.str() + ": " + e.what());
        }
        rep.residuals.push_back(ok ? 0.0 : 1.0);
        if (!ok) rep.pass = false;
    }
}

}  // namespace

CheckReport check_unitary_involution(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points) {
    if (i > chain.r()) throw OutOfRange("phi index beyond r");
    CheckReport rep = exact_report("unitary");
    const ExactMatrix id = ExactMatrix::identity(chain.n());
    for_points(rep, points, [&](const GaussRat& z) {
        ExactMatrix phi = evaluate_exact(chain, z).phi[i];
        ExactMatrix adj = phi.adjoint();
        bool unitary = phi * adj == id, hermitian = phi == adj, involution = phi * phi == id;
        rep.details.push_back(z.str() + ": phi_" + std::to_string(i) + " unitary=" + (unitary ? "yes" : "no") +
                              " hermitian=" + (hermitian ? "yes" : "no") + " involution=" + (involution ? "yes" : "no"));
        return hermitian && involution;
    });
    return rep;
}

CheckReport check_splitting(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points) {
    if (i >= chain.r()) throw OutOfRange("splitting needs i < r");
    CheckReport rep = exact_report("splitting");
    const size_t n = chain.n();
    for_points(rep, points, [&](const GaussRat& z) {
        ChainPoint<GaussRat> cp = evaluate_exact(chain, z);
        const ExactMatrix f = f_chain(cp, false)[i].columns;
        const ExactMatrix& a = cp.alpha_basis[i];
        size_t in_f = exact_meet(f, a, n).cols();
        size_t in_perp = exact_meet(exact_orthocomplement(f, n), a, n).cols();
        ExactMatrix pf = exact_projector(f, n);
        bool commute = pf * cp.pi[i] == cp.pi[i] * pf;
        bool ok = in_f + in_perp == a.cols() && commute;
        if (!ok)
            rep.details.push_back(z.str() + ": rank alpha_" + std::to_string(i + 1) + " = " + std::to_string(a.cols()) +
                                  ", in F_" + std::to_string(i) + ": " + std::to_string(in_f) + ", in F_" +
                                  std::to_string(i) + "^perp: " + std::to_string(in_perp) +
                                  (commute ? "" : ", projectors do not commute"));
        return ok;
    });
    return rep;
}

CheckReport check_sij_images(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points) {
    if (i > chain.r()) throw OutOfRange("S^i_j index beyond r");
    CheckReport rep = exact_report("sij_images");
    const size_t n = chain.n();
    for_points(rep, points, [&](const GaussRat& z) {
        ChainPoint<GaussRat> cp = evaluate_exact(chain, z);
        ExactMatrix pf = exact_projector(f_chain(cp, false)[i].columns, n);
        ExactMatrix p0 = cp.f0_effective(), p0perp = ExactMatrix::identity(n) - p0;
        bool ok = true;
        for (size_t j = 0; j <= i; ++j) {
            ExactMatrix s = elementary_S<GaussRat>(static_cast<long>(i), static_cast<long>(j), cp.pi, n);
            ExactMatrix a = s * p0, b = s * p0perp;
            bool even = j % 2 == 0;
            bool a_ok = even ? pf * a == a : is_zero_matrix(pf * a);
            bool b_ok = even ? is_zero_matrix(pf * b) : pf * b == b;
            if (!a_ok || !b_ok) {
                ok = false;
                rep.details.push_back(z.str() + ": S^" + std::to_string(i) + "_" + std::to_string(j) + " images off" +
                                      (a_ok ? "" : " (F0 part)") + (b_ok ? "" : " (F0-perp part)"));
            }
        }
        return ok;
    });
    return rep;
}

CheckReport check_backend_consistency(const UnitonChain& chain, const std::vector<GaussRat>& points, double tol) {
    CheckReport rep = exact_report("backend_consistency");
    FloatChainData<cquad> data(chain);
    for (const auto& z : points) {
        rep.points.push_back(z.str());
        double worst = 0;
        try {
            ChainPoint<GaussRat> ex = evaluate_exact(chain, z);
            const cquad zf = to_complex<cquad>(z);
            ChainPoint<cquad> fl = evaluate_chain<cquad>(chain, zf, data.values(zf));
            for (size_t i = 0; i < ex.phi.size(); ++i) {
                Matrix<cquad> e = to_float<cquad>(ex.phi[i]);
                double scale = std::max(1.0, static_cast<double>(max_abs_entry(e)));
                worst = std::max(worst, static_cast<double>(max_abs_entry(Matrix<cquad>(e - fl.phi[i]))) / scale);
            }
        } catch (const Error& e) {
            rep.details.push_back(z.str() + ": " + e.what());
            worst = 1;
        }
        rep.residuals.push_back(worst);
        if (!(worst <= tol)) rep.pass = false;
    }
    return rep;
}

}  // namespace uniton
