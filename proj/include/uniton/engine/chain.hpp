#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uniton/engine/f0_array.hpp"

namespace uniton {

/// H_0 = K_0, H_i = sum_{s=1}^{i} (-1)^{s+i} C(i-1,s-1) K_s.
MeroGrid k_to_h(const MeroGrid& k);
/// K_0 = H_0, K_i = sum_{s=1}^{i} C(i-1,s-1) H_s.
MeroGrid h_to_k(const MeroGrid& h);
/// R_i = sum_{l=0}^{i} C(i,l) H_l.
MeroGrid h_to_r(const MeroGrid& h);

long binomial(long n, long k);

struct SamplingOptions {
    std::uint64_t seed = 0;
    size_t count = 8;
    long max_magnitude = 97;
    size_t max_attempts = 400;
    /// Tried before any random draw.
    std::vector<GaussRat> preferred_points;
};

/// Generic ranks (maximum over the sample points) and the points realizing them.
struct GenericProfile {
    std::vector<GaussRat> points;
    std::vector<size_t> alpha_ranks;  // rank alpha_1 .. alpha_r
    std::vector<size_t> f_ranks;      // rank F_0 .. F_r
};

class UnitonChain {
public:
    /// Grassmannian data: the array must be a valid F0-array.
    static UnitonChain from_array(const F0Array& array, int q_sign);
    /// Raw spanning data H_{i,j}; no alternation is required (U(n)-valued maps).
    static UnitonChain from_spanning_data(const Subspace& f0, MeroGrid h, int q_sign);

    size_t n() const { return f0_.n; }
    size_t r() const { return h_.size(); }
    int q_sign() const { return q_sign_; }
    const Subspace& f0() const { return f0_; }
    const MeroGrid& h() const { return h_; }
    /// Source K-array, present when built from an F0-array.
    const std::optional<MeroGrid>& k() const { return k_; }
    bool grassmannian_data() const { return k_.has_value(); }

    /// H^{(k)}_{m,j} for k + m <= r - 1.
    const MeroVector& h_derivative(size_t k, size_t m, size_t j) const;

    const std::optional<GenericProfile>& profile() const { return profile_; }
    void set_profile(GenericProfile p) { profile_ = std::move(p); }

    UnitonChain with_q_sign(int q) const;

private:
    void materialize_derivatives();

    Subspace f0_;
    int q_sign_ = 1;
    MeroGrid h_;
    std::optional<MeroGrid> k_;
    std::vector<std::vector<std::vector<MeroVector>>> hd_;  // [k][m][j]
    std::optional<GenericProfile> profile_;
};

/// Flips Q_sign: every phi_i becomes its Grassmannian dual.
UnitonChain dualize(const UnitonChain& chain);

GenericProfile profile_chain(const UnitonChain& chain, const SamplingOptions& options);

/// from_array followed by profile_chain.
UnitonChain build_chain(const F0Array& array, int q_sign, const SamplingOptions& options = {});

/// Draws a rational point with |numerators|, |denominators| <= max_magnitude.
template <class Rng>
GaussRat random_sample_point(Rng& rng, long max_magnitude);

}  // namespace uniton

#include <random>

namespace uniton {

template <class Rng>
GaussRat random_sample_point(Rng& rng, long max_magnitude) {
    std::uniform_int_distribution<long> num(-max_magnitude, max_magnitude), den(1, max_magnitude);
    return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace uniton
