#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uniton/combinatorics/matching.hpp"

namespace uniton {

struct EnumerateOptions {
    /// Keep only pairs realized by random data with alpha_1 full.
    bool realizability = true;
    bool apply_bound = true;
    std::uint64_t seed = 1;
    size_t attempts = 2;
    size_t points = 8;
    /// Restrict to a single F0 dimension.
    std::optional<size_t> only_k;
};

struct EnumeratedPair {
    AdaptedPair pair;
    std::optional<F0Array> witness;  // realizing array when the realizability pass ran
};

/// Adapted pairs with rank F_r = p, nonzero last row, static fullness, r within the uniton bound;
/// ordered by k descending then lexicographically on the matrix forms of (L, S).
std::vector<EnumeratedPair> enumerate_pairs(size_t n, size_t p, size_t r, const EnumerateOptions& opt = {});

/// Bound for any p: dualizes to q = n - p when 2p > n.
long uniton_bound_any(long k, long p, long n);

/// Statically admissible candidates before the bound and realizability filters.
std::vector<AdaptedPair> static_candidates(size_t n, size_t p, size_t r, size_t k);

/// Degree used for realizability witnesses.
int realizability_degree(const AdaptedPair& pair);

/// Random witness with alpha_1 full matching the pair, if one is found within the attempts.
std::optional<F0Array> realize_pair(const AdaptedPair& pair, std::uint64_t seed, size_t attempts, size_t points);

}  // namespace uniton
