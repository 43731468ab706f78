#include "uniton/engine/chain.hpp"

#include <algorithm>

#include "uniton/engine/evaluation.hpp"
#include "uniton/numeric/errors.hpp"

namespace uniton {

long binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

MeroGrid zero_grid_like(const MeroGrid& g) {
    MeroGrid out(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        for (const auto& v : g[i]) out[i].push_back(zero_mero(v.size()));
    return out;
}

void accumulate(MeroVector& acc, long coeff, const MeroVector& v) {
    if (coeff == 0 || is_zero(v)) return;
    acc = acc + scale(RatFun(GaussRat(coeff)), v);
}

}  // namespace

MeroGrid k_to_h(const MeroGrid& k) {
    MeroGrid h = zero_grid_like(k);
    if (k.empty()) return h;
    h[0] = k[0];
    for (size_t i = 1; i < k.size(); ++i)
        for (size_t j = 0; j < k[i].size(); ++j)
            for (size_t s = 1; s <= i; ++s) {
                long sign = (s + i) % 2 == 0 ? 1 : -1;
                accumulate(h[i][j], sign * binomial(static_cast<long>(i) - 1, static_cast<long>(s) - 1), k[s][j]);
            }
    return h;
}

MeroGrid h_to_k(const MeroGrid& h) {
    MeroGrid k = zero_grid_like(h);
    if (h.empty()) return k;
    k[0] = h[0];
    for (size_t i = 1; i < h.size(); ++i)
        for (size_t j = 0; j < h[i].size(); ++j)
            for (size_t s = 1; s <= i; ++s)
                accumulate(k[i][j], binomial(static_cast<long>(i) - 1, static_cast<long>(s) - 1), h[s][j]);
    return k;
}

MeroGrid h_to_r(const MeroGrid& h) {
    MeroGrid r = zero_grid_like(h);
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < h[i].size(); ++j)
            for (size_t l = 0; l <= i; ++l)
                accumulate(r[i][j], binomial(static_cast<long>(i), static_cast<long>(l)), h[l][j]);
    return r;
}

UnitonChain UnitonChain::from_array(const F0Array& array, int q_sign) {
    if (q_sign != 1 && q_sign != -1) throw BadArguments("Q_sign must be +1 or -1");
    UnitonChain c;
    c.f0_ = array.f0;
    c.q_sign_ = q_sign;
    c.k_ = array.entries;
    c.h_ = k_to_h(array.entries);
    c.materialize_derivatives();
    return c;
}

UnitonChain UnitonChain::from_spanning_data(const Subspace& f0, MeroGrid h, int q_sign) {
    if (q_sign != 1 && q_sign != -1) throw BadArguments("Q_sign must be +1 or -1");
    for (const auto& row : h) {
        if (row.size() != f0.n) throw BadArguments("each row needs n entries");
        for (const auto& v : row)
            if (v.size() != f0.n) throw BadArguments("entries must be vectors of length n");
    }
    UnitonChain c;
    c.f0_ = f0;
    c.q_sign_ = q_sign;
    c.h_ = std::move(h);
    c.materialize_derivatives();
    return c;
}

void UnitonChain::materialize_derivatives() {
    const size_t r = h_.size(), n = f0_.n;
    hd_.assign(r, {});
    for (size_t k = 0; k < r; ++k) {
        hd_[k].resize(r - k);
        for (size_t m = 0; m + k < r; ++m) {
            hd_[k][m].resize(n);
            for (size_t j = 0; j < n; ++j)
                hd_[k][m][j] = k == 0 ? h_[m][j] : derivative(hd_[k - 1][m][j]);
        }
    }
}

const MeroVector& UnitonChain::h_derivative(size_t k, size_t m, size_t j) const {
    if (k + m >= r() || j >= n()) throw OutOfRange("derivative table index");
    return hd_[k][m][j];
}

UnitonChain UnitonChain::with_q_sign(int q) const {
    if (q != 1 && q != -1) throw BadArguments("Q_sign must be +1 or -1");
    UnitonChain c = *this;
    c.q_sign_ = q;
    if (c.profile_) {
        // Dualizing replaces every F_i by its complement.
        if (q != q_sign_)
            for (auto& f : c.profile_->f_ranks) f = n() - f;
    }
    return c;
}

UnitonChain dualize(const UnitonChain& chain) { return chain.with_q_sign(-chain.q_sign()); }

namespace {

struct Observation {
    GaussRat z;
    std::vector<size_t> ranks;  // alpha ranks then F ranks
};


}  // namespace

GenericProfile profile_chain(const UnitonChain& chain, const SamplingOptions& options) {
    if (options.count == 0) throw BadArguments("need at least one sample point");
    std::mt19937_64 rng(options.seed);
    EvalOptions eo;
    eo.check_generic_ranks = false;
    const size_t r = chain.r();

    std::vector<Observation> obs;
    std::vector<size_t> best;
    size_t attempts = 0, preferred = 0;
    auto count_at_max = [&] {
        size_t c = 0;
        for (const auto& o : obs)
            if (o.ranks == best) ++c;
        return c;
    };
    while (count_at_max() < options.count) {
        if (attempts++ >= options.max_attempts)
            throw RankDropAtPoint("could not find enough points of generic rank");
        GaussRat z = preferred < options.preferred_points.size() ? options.preferred_points[preferred++]
                                                                 : random_sample_point(rng, options.max_magnitude);
        bool duplicate = false;
        for (const auto& o : obs) duplicate = duplicate || o.z == z;
        if (duplicate) continue;
        try {
            ChainPoint<GaussRat> cp = evaluate_exact(chain, z, eo);
            Observation o{z, cp.alpha_ranks};
            for (const auto& f : f_chain(cp, false)) o.ranks.push_back(f.columns.cols());
            if (best.empty()) best = o.ranks;
            for (size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], o.ranks[i]);
            obs.push_back(std::move(o));
        } catch (const PoleAtPoint&) {
        }
    }
    GenericProfile p;
    for (const auto& o : obs)
        if (o.ranks == best && p.points.size() < options.count) p.points.push_back(o.z);
    p.alpha_ranks.assign(best.begin(), best.begin() + static_cast<long>(r));
    p.f_ranks.assign(best.begin() + static_cast<long>(r), best.end());
    return p;
}

UnitonChain build_chain(const F0Array& array, int q_sign, const SamplingOptions& options) {
    UnitonChain c = UnitonChain::from_array(array, q_sign);
    c.set_profile(profile_chain(c, options));
    return c;
}

}  // namespace uniton
