#pragma once

#include <cstdint>
#include <random>

#include "uniton/engine/f0_array.hpp"

namespace uniton {

/// Small Gaussian rational with numerators in [-3, 3] and denominators in {1, 2}.
GaussRat random_coefficient(std::mt19937_64& rng);

/// Polynomial vector sum_d z^d basis * a_d with random coefficient vectors a_d.
MeroVector random_poly_vector(std::mt19937_64& rng, const ExactMatrix& basis, int degree);

/// Random subspace of dimension k with small integer basis vectors.
Subspace random_subspace(std::mt19937_64& rng, size_t n, size_t k);

struct RandomArrayOptions {
    size_t n = 4;
    size_t k = 2;
    size_t r = 2;
    size_t active_columns = 2;
    int degree = 2;
    bool random_f0_basis = false;
    /// Probability that an entry below the first nonzero one is left zero.
    double sparsity = 0.3;
};

/// Random valid F0-array: each active column starts at a random row and alternates.
F0Array random_f0_array(std::uint64_t seed, const RandomArrayOptions& options);

}  // namespace uniton
