#include "uniton/verify/differential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

using CM = Matrix<cquad>;

cquad cq(const float128& re, const float128& im) { return ComplexTraits<cquad>::make(re, im); }

std::string point_text(const cquad& z) {
    using std::imag;
    using std::real;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", static_cast<double>(real(z)), static_cast<double>(imag(z)));
    return buf;
}

double dbl(const float128& x) { return static_cast<double>(x); }

double col_norm(const CM& m, size_t c) { return dbl(column_norm(m, c)); }

// Sections below this fraction of the largest one are roundoff images of exact zeros.
constexpr double kNegligibleSection = 1e-20;

// Evaluations on the lattice z + (a + ib) h, shared through the model cache.
class Grid {
public:
    Grid(const FloatModel& m, const cquad& z, double h) : m_(m), z_(z), h_(h) {}

    const ChainPoint<cquad>& at(int a, int b) const { return m_.at(z_ + cq(float128(a) * h_, float128(b) * h_)); }

    // {d/dz, d/dzbar} of g at lattice point (a, b).
    template <class G>
    std::pair<CM, CM> wirtinger(G g, int a, int b) const {
        CM dx = g(a + 1, b) - g(a - 1, b);
        CM dy = g(a, b + 1) - g(a, b - 1);
        const float128 inv = float128(1) / (float128(4) * h_);
        const cquad re = cq(inv, 0), im = cq(0, inv);
        return {dx * re - dy * im, dx * re + dy * im};
    }

    CM pi_perp(int a, int b, size_t l) const { return at(a, b).pi_perp(l); }

    // A_z^{phi_i} = sum_{l <= i} d_z pi_l^perp and A_zbar^{phi_i} = -sum d_zbar pi_l^perp.
    std::pair<CM, CM> accumulated(int a, int b, size_t i) const {
        const size_t n = m_.n();
        CM az(n, n), azbar(n, n);
        for (size_t l = 1; l <= i; ++l) {
            auto d = wirtinger([&](int x, int y) { return pi_perp(x, y, l); }, a, b);
            az += d.first;
            azbar -= d.second;
        }
        return {az, azbar};
    }

    // A_z = phi^{-1} d_z phi / 2 and A_zbar likewise, phi = phi_i.
    std::pair<CM, CM> direct(int a, int b, size_t i) const {
        auto d = wirtinger([&](int x, int y) { return at(x, y).phi[i]; }, a, b);
        CM inv = at(a, b).phi[i].adjoint();
        const cquad half = cq(float128(0.5), 0);
        return {inv * d.first * half, inv * d.second * half};
    }

private:
    const FloatModel& m_;
    cquad z_;
    float128 h_;
};

CheckReport float_report(const char* name) {
    CheckReport r;
    r.check = name;
    r.backend = ComplexTraits<cquad>::name();
    return r;
}

// Evaluates residual(grid) at h and h/2 for every point and applies the pass and contraction rules.
template <class Residual>
void run_points(CheckReport& rep, const FloatModel& model, const std::vector<cquad>& points, const DiffOptions& opt,
                Residual residual) {
    for (const auto& z : points) {
        rep.points.push_back(point_text(z));
        double rh = 0, rh2 = 0;
        try {
            rh = residual(Grid(model, z, opt.h));
            rh2 = residual(Grid(model, z, opt.h / 2));
        } catch (const StepTooLarge&) {
            throw;
        } catch (const Error& e) {
            rep.fail(point_text(z) + ": " + e.what());
            rh = rh2 = 1;
        }
        if (std::abs(rh - rh2) > opt.tol)
            throw StepTooLarge(rep.check + " at " + point_text(z) + ": residuals " + std::to_string(rh) + " at h and " +
                               std::to_string(rh2) + " at h/2 disagree beyond tol");
        rep.residuals.push_back(rh);
        rep.residuals_half.push_back(rh2);
        if (!(rh <= opt.tol && rh2 <= opt.tol)) {
            rep.pass = false;
            rep.details.push_back(point_text(z) + ": residual " + std::to_string(rh));
        }
        if (!(rh2 <= opt.contraction_factor * rh + opt.floor)) {
            rep.contraction = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: no contraction, %.3e at h, %.3e at h/2", point_text(z).c_str(), rh, rh2);
            rep.details.push_back(buf);
        }
    }
}

void require_index(size_t i, size_t limit, const char* what) {
    if (i > limit) throw OutOfRange(std::string(what) + " index out of range");
}

}  // namespace

FloatModel::FloatModel(const UnitonChain& chain) : chain_(chain), data_(chain) {}

void FloatModel::inject_sections(size_t i, SectionHook hook) {
    if (i >= r()) throw OutOfRange("injection index beyond the chain");
    hooks_[i] = std::move(hook);
    cache_.clear();
}

const ChainPoint<cquad>& FloatModel::at(const cquad& z) const {
    using std::imag;
    using std::real;
    std::pair<float128, float128> key{real(z), imag(z)};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ChainPoint<cquad> cp = evaluate_chain<cquad>(chain_, z, data_.values(z));
    if (!hooks_.empty()) {
        const size_t n = chain_.n();
        for (const auto& [i, hook] : hooks_) {
            cp.sections[i] = hook(z);
            cp.alpha_basis[i] = Linalg<cquad>::basis(cp.sections[i]);
            cp.alpha_ranks[i] = cp.alpha_basis[i].cols();
            cp.pi[i] = Linalg<cquad>::projector_from_basis(cp.alpha_basis[i], n);
        }
        const CM id = CM::identity(n);
        for (size_t l = 1; l <= cp.r; ++l) cp.phi[l] = cp.phi[l - 1] * (cp.pi[l - 1] * cquad(2) - id);
    }
    return cache_.emplace(key, std::move(cp)).first->second;
}

std::vector<cquad> float_sample_points(const FloatModel& model, size_t count, std::uint64_t seed, double radius,
                                       double h) {
    std::mt19937_64 rng(seed);
    const long dens[] = {2, 3, 5, 7};
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<cquad> out;
    for (size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
        long dr = dens[pick(rng)], di = dens[pick(rng)];
        std::uniform_int_distribution<long> nr(-static_cast<long>(radius * dr), static_cast<long>(radius * dr));
        std::uniform_int_distribution<long> ni(-static_cast<long>(radius * di), static_cast<long>(radius * di));
        cquad z = cq(float128(nr(rng)) / dr, float128(ni(rng)) / di);
        if (std::find(out.begin(), out.end(), z) != out.end()) continue;
        try {
            Grid g(model, z, h);
            for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}) g.at(a, b);
            out.push_back(z);
        } catch (const Error&) {
        }
    }
    if (out.size() < count) throw RankDropAtPoint("could not find enough generic float sample points");
    return out;
}

CheckReport check_uniton_conditions(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                    const DiffOptions& opt) {
    require_index(i + 1, model.r(), "uniton condition");
    CheckReport rep = float_report("uniton_conditions");
    const size_t n = model.n();
    double worst_parts[3] = {0, 0, 0};
    run_points(rep, model, points, opt, [&](const Grid& g) {
        auto sec = [&](int a, int b) { return g.at(a, b).sections[i]; };
        const CM s = sec(0, 0);
        const CM dzbar = g.wirtinger(sec, 0, 0).second;
        auto [az, azbar] = g.accumulated(0, 0, i);
        const CM perp = CM::identity(n) - g.at(0, 0).pi[i];
        const CM d = dzbar + azbar * s;
        const CM pd = perp * d, pa = perp * az * s;
        double worst = 0;
        const double cutoff = kNegligibleSection * dbl(max_column_norm(s));
        for (size_t c = 0; c < s.cols(); ++c) {
            double scale = col_norm(s, c);
            if (scale <= cutoff) continue;
            double parts[3] = {col_norm(d, c) / scale, col_norm(pd, c) / scale, col_norm(pa, c) / scale};
            for (int q = 0; q < 3; ++q) {
                worst_parts[q] = std::max(worst_parts[q], parts[q]);
                worst = std::max(worst, parts[q]);
            }
        }
        return worst;
    });
    char buf[200];
    std::snprintf(buf, sizeof buf, "max |D_zbar s| %.3e, max |pi^perp D_zbar s| %.3e, max |pi^perp A_z s| %.3e",
                  worst_parts[0], worst_parts[1], worst_parts[2]);
    rep.details.push_back(buf);
    return rep;
}

CheckReport check_shift_identity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                 const DiffOptions& opt, std::optional<size_t> max_k) {
    require_index(i + 1, model.r(), "shift identity");
    CheckReport rep = float_report("shift_identity");
    const size_t n = model.n();
    if (i == 0 && !max_k) {
        rep.details.push_back("no k with 0 <= k <= i - 1");
        return rep;
    }
    const size_t kmax = max_k.value_or(i - 1);
    if (kmax > i) throw OutOfRange("shift identity k beyond i");
    run_points(rep, model, points, opt, [&](const Grid& g) {
        auto sec = [&](int a, int b) { return g.at(a, b).sections[i]; };
        const CM s = sec(0, 0);
        const CM az = g.accumulated(0, 0, i).first;
        const CM image = az * s;
        const double cutoff = kNegligibleSection * dbl(max_column_norm(s));
        double worst = 0;
        for (size_t k = 0; k <= kmax; ++k)
            for (size_t j = 0; j < n; ++j) {
                const size_t c = k * n + j;
                double scale = col_norm(s, c);
                std::vector<cquad> diff = image.column(c);
                if (k + 1 <= i) {
                    scale = std::max(scale, col_norm(s, c + n));
                    std::vector<cquad> next = s.column(c + n);
                    for (size_t q = 0; q < n; ++q) diff[q] += next[q];
                }
                if (scale <= cutoff) continue;
                worst = std::max(worst, dbl(vector_norm(diff)) / scale);
            }
        return worst;
    });
    return rep;
}

CheckReport check_harmonicity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                              const DiffOptions& opt) {
    require_index(i, model.r(), "harmonicity");
    CheckReport rep = float_report("harmonicity");
    run_points(rep, model, points, opt, [&](const Grid& g) {
        auto [az, azbar] = g.direct(0, 0, i);
        CM dzbar_az = g.wirtinger([&](int a, int b) { return g.direct(a, b, i).first; }, 0, 0).second;
        CM m = az * azbar - azbar * az - dzbar_az;
        double a = dbl(max_column_norm(az));
        return dbl(max_column_norm(m)) / std::max(1.0, a * a);
    });
    return rep;
}

CheckReport check_interchange(const FloatModel& model, const std::vector<cquad>& points, const DiffOptions& opt) {
    if (!model.chain().grassmannian_data())
        return CheckReport::not_applicable("interchange", ComplexTraits<cquad>::name(),
                                           "raw spanning data: phi is not Grassmannian-valued");
    CheckReport rep = float_report("interchange");
    const size_t n = model.n(), r = model.r();
    run_points(rep, model, points, opt, [&](const Grid& g) {
        const CM az = g.accumulated(0, 0, r).first;
        const CM pf = Linalg<cquad>::projector_from_basis(f_chain(g.at(0, 0), false)[r].columns, n);
        const CM pp = CM::identity(n) - pf;
        double a = std::max(1.0, dbl(max_column_norm(az)));
        return std::max(dbl(max_column_norm(CM(pf * az * pf))), dbl(max_column_norm(CM(pp * az * pp)))) / a;
    });
    return rep;
}

CheckReport check_split_holomorphicity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                       const DiffOptions& opt) {
    require_index(i + 1, model.r(), "split holomorphicity");
    if (!model.chain().grassmannian_data())
        return CheckReport::not_applicable("split_holomorphicity", ComplexTraits<cquad>::name(),
                                           "raw spanning data: phi is not Grassmannian-valued");
    CheckReport rep = float_report("split_holomorphicity");
    const size_t n = model.n();
    const CM id = CM::identity(n);
    run_points(rep, model, points, opt, [&](const Grid& g) {
        auto parts = [&](int a, int b) {
            const auto& cp = g.at(a, b);
            const CM f = f_chain(cp, false)[i].columns;
            const CM& al = cp.alpha_basis[i];
            CM beta = Linalg<cquad>::projector_from_basis(Linalg<cquad>::meet(f, al, n), n);
            CM beta_perp = Linalg<cquad>::projector_from_basis(
                Linalg<cquad>::meet(Linalg<cquad>::complement(f, n), Linalg<cquad>::complement(al, n), n), n);
            return std::make_pair(beta, beta_perp);
        };
        auto [az, azbar] = g.accumulated(0, 0, i);
        auto p0 = parts(0, 0);
        CM d_beta = g.wirtinger([&](int a, int b) { return parts(a, b).first; }, 0, 0).second;
        CM d_beta_perp = g.wirtinger([&](int a, int b) { return parts(a, b).second; }, 0, 0).first;
        CM hol = (id - p0.first) * (d_beta + azbar * p0.first);
        CM antihol = (id - p0.second) * (d_beta_perp + az * p0.second);
        double a = std::max(1.0, dbl(max_column_norm(az)));
        return std::max(dbl(max_column_norm(hol)), dbl(max_column_norm(antihol))) / a;
    });
    return rep;
}

double accumulated_vs_direct(const FloatModel& model, size_t i, const cquad& z, double h) {
    require_index(i, model.r(), "A_z");
    Grid g(model, z, h);
    CM acc = g.accumulated(0, 0, i).first, dir = g.direct(0, 0, i).first;
    return dbl(max_abs_entry(CM(acc - dir))) / std::max(1.0, dbl(max_abs_entry(dir)));
}

}  // namespace uniton
