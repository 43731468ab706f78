#pragma once

#include <vector>

#include "uniton/numeric/gauss_rat.hpp"
#include "uniton/numeric/matrix.hpp"

namespace uniton {

using ExactMatrix = Matrix<GaussRat>;
using ExactVector = std::vector<GaussRat>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref_in_place(ExactMatrix& m);

size_t exact_rank(const ExactMatrix& m);

/// Canonical basis of the column space (n x rank); equal spans give equal results.
ExactMatrix column_basis(const ExactMatrix& m);

/// Basis of {x : m x = 0} as columns.
ExactMatrix kernel(const ExactMatrix& m);

/// Orthogonal projector onto the column span (zero columns allowed).
ExactMatrix exact_projector(const ExactMatrix& spanning, size_t ambient);

ExactMatrix exact_meet(const ExactMatrix& a, const ExactMatrix& b, size_t ambient);
ExactMatrix exact_join(const ExactMatrix& a, const ExactMatrix& b, size_t ambient);
ExactMatrix exact_orthocomplement(const ExactMatrix& a, size_t ambient);

/// True if every column of b lies in the span of a.
bool exact_contains(const ExactMatrix& a, const ExactMatrix& b);
bool exact_same_span(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix exact_inverse(const ExactMatrix& m);

bool is_zero_matrix(const ExactMatrix& m);
ExactMatrix column_matrix(const ExactVector& v);

}  // namespace uniton
