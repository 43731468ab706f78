#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniton/combinatorics/adapted_pair.hpp"
#include "uniton/engine/chain.hpp"

namespace uniton {

/// How the array is read: K is an F0-array (validated), H is raw spanning data for U(n)-valued maps.
enum class ArrayKind { K, H };

struct Scenario {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    int q_sign = 1;
    ArrayKind kind = ArrayKind::K;
    std::optional<ExactMatrix> f0_basis;  // n x k; standard coordinates when absent
    MeroGrid array;
    std::optional<AdaptedPair> pair;
    std::uint64_t seed = 0;
    /// Tried before random sample points.
    std::vector<GaussRat> points;

    size_t r() const { return array.size(); }
    Subspace f0() const;
    /// Throws PatternViolation or BadArguments for invalid K data.
    F0Array f0_array() const;
    UnitonChain chain() const;
    /// chain() followed by generic-rank profiling with the scenario's seed and points.
    UnitonChain build(size_t sample_count = 8) const;
};

/// Checks shapes; kind K also runs the F0-array validation.
void validate_scenario(const Scenario& s);

}  // namespace uniton
