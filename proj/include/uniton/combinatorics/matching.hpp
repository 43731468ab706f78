#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uniton/combinatorics/adapted_pair.hpp"
#include "uniton/engine/chain.hpp"

namespace uniton {

struct MatchingIssue {
    std::string clause;  // "i", "ii" or "iii"
    size_t row = 0;
    std::string detail;
};

struct MatchingReport {
    bool ok = true;
    std::vector<MatchingIssue> issues;
    std::vector<GaussRat> points;
};

struct MatchingOptions {
    std::uint64_t seed = 0;
    size_t points = 8;
    long max_magnitude = 97;
    /// Stop at the first point whose rank already exceeds the pair (generic rank is a maximum).
    bool early_exit = false;
};

/// Checks that the array matches the pair: block membership and support, per-block ranks,
/// and combined ranks, all measured generically.
MatchingReport matching_check(const F0Array& array, const AdaptedPair& pair, const MatchingOptions& opt = {});

/// Generic ranks l_j^t and s_j^t measured on an array with the pair's leading block sizes.
AdaptedPair measure_pair(const F0Array& array, const std::vector<size_t>& l0, const std::vector<size_t>& s0,
                         const MatchingOptions& opt = {});

/// Random polynomial data in the blocks of the pair, zero elsewhere.
F0Array random_matching_array(const AdaptedPair& pair, std::uint64_t seed, int degree);
F0Array random_matching_array(const AdaptedPair& pair, const Subspace& f0, std::uint64_t seed, int degree);

/// alpha_1 full: the coefficient vectors of row 0 span C^n.
bool alpha1_full(const F0Array& array);

}  // namespace uniton
