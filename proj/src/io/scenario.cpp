#include "uniton/io/scenario.hpp"

#include "uniton/numeric/errors.hpp"

namespace uniton {

Subspace Scenario::f0() const {
    if (f0_basis) return Subspace::from_basis(n, *f0_basis);
    return Subspace::standard(n, k);
}

F0Array Scenario::f0_array() const {
    if (kind != ArrayKind::K) throw BadArguments("raw H data is not an F0-array");
    return make_f0_array(f0(), array);
}

UnitonChain Scenario::chain() const {
    validate_scenario(*this);
    if (kind == ArrayKind::K) return UnitonChain::from_array(f0_array(), q_sign);
    return UnitonChain::from_spanning_data(f0(), array, q_sign);
}

UnitonChain Scenario::build(size_t sample_count) const {
    UnitonChain c = chain();
    SamplingOptions opt;
    opt.seed = seed;
    opt.count = sample_count;
    opt.preferred_points = points;
    c.set_profile(profile_chain(c, opt));
    return c;
}

void validate_scenario(const Scenario& s) {
    if (s.n == 0) throw BadArguments("n must be positive");
    if (s.k > s.n) throw BadArguments("k exceeds n");
    if (s.q_sign != 1 && s.q_sign != -1) throw BadArguments("Q_sign must be +1 or -1");
    if (s.f0_basis && (s.f0_basis->rows() != s.n || s.f0_basis->cols() != s.k))
        throw BadArguments("F0_basis must be n x k");
    if (s.array.size() + 1 > s.n) throw BadArguments("r must be at most n - 1");
    for (const auto& row : s.array) {
        if (row.size() != s.n) throw BadArguments("each array row needs n entries");
        for (const auto& v : row)
            if (v.size() != s.n) throw BadArguments("each entry must be a vector of length n");
    }
    if (s.pair && (s.pair->n != s.n || s.pair->k != s.k || s.pair->r != s.r()))
        throw BadArguments("pair disagrees with the scenario's n, k or r");
    if (s.kind == ArrayKind::K) make_f0_array(s.f0(), s.array);
}

}  // namespace uniton
