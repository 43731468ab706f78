#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uniton/engine/evaluation.hpp"
#include "uniton/verify/report.hpp"

namespace uniton {

/// binary128 evaluations of a chain, memoized by point, with an optional section override.
class FloatModel {
public:
    using SectionHook = std::function<Matrix<cquad>(const cquad&)>;

    explicit FloatModel(const UnitonChain& chain);

    /// Replaces the spanning sections of alpha_{i+1} by hook(z); pi_{i+1} and phi_{i+1..r} follow.
    /// For negative controls only: the hook may be non-meromorphic.
    void inject_sections(size_t i, SectionHook hook);

    const ChainPoint<cquad>& at(const cquad& z) const;

    const UnitonChain& chain() const { return chain_; }
    size_t n() const { return chain_.n(); }
    size_t r() const { return chain_.r(); }
    void clear_cache() const { cache_.clear(); }

private:
    const UnitonChain& chain_;
    FloatChainData<cquad> data_;
    std::map<size_t, SectionHook> hooks_;
    mutable std::map<std::pair<float128, float128>, ChainPoint<cquad>> cache_;
};

struct DiffOptions {
    double h = 1e-5;
    double tol = 1e-6;
    /// Contraction rule residual(h/2) <= factor * residual(h) + floor.
    double contraction_factor = 0.3;
    double floor = 1e-18;
};

/// Points with |Re|, |Im| <= radius where the chain and its stencil evaluate at generic rank.
std::vector<cquad> float_sample_points(const FloatModel& model, size_t count, std::uint64_t seed, double radius = 2,
                                       double h = 1e-5);

/// alpha_{i+1} sections: D_zbar sigma = 0, pi^perp D_zbar sigma = 0 and pi^perp A_z sigma = 0 for phi_i,
/// with A_z^{phi_i} = sum_{l <= i} d_z pi_l^perp.
CheckReport check_uniton_conditions(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                    const DiffOptions& opt = {});

/// A_z^{phi_i} alpha^{(k)}_{i+1,j} = -alpha^{(k+1)}_{i+1,j} for 0 <= k <= max_k (default i - 1).
CheckReport check_shift_identity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                 const DiffOptions& opt = {}, std::optional<size_t> max_k = std::nullopt);

/// [A_z, A_zbar] - d_zbar A_z = 0 for A_z = phi_i^{-1} d_z phi_i / 2.
CheckReport check_harmonicity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                              const DiffOptions& opt = {});

/// A_z^{phi_r} maps F_r into F_r^perp and F_r^perp into F_r. Grassmannian data only.
CheckReport check_interchange(const FloatModel& model, const std::vector<cquad>& points, const DiffOptions& opt = {});

/// F_i cap alpha_{i+1} is D_zbar-closed and F_i^perp cap alpha_{i+1}^perp is D_z-closed for phi_i. Grassmannian only.
CheckReport check_split_holomorphicity(const FloatModel& model, size_t i, const std::vector<cquad>& points,
                                       const DiffOptions& opt = {});

/// A_z^{phi_i} accumulated from projector derivatives and directly from phi_i; max relative difference.
double accumulated_vs_direct(const FloatModel& model, size_t i, const cquad& z, double h);

}  // namespace uniton
