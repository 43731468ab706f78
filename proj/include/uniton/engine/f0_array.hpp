#pragma once

#include <optional>
#include <vector>

#include "uniton/numeric/exact_linalg.hpp"
#include "uniton/numeric/ratfun.hpp"

namespace uniton {

/// r x n grid of meromorphic vectors; grid[row][column].
using MeroGrid = std::vector<std::vector<MeroVector>>;

enum class ColumnPattern {
    Zero,          // column vanishes identically
    EvenInF0,      // even rows F0-valued, odd rows F0-perp-valued
    EvenInF0Perp,  // even rows F0-perp-valued, odd rows F0-valued
};

/// Fixed subspace F0 of C^n with its projectors.
struct Subspace {
    size_t n = 0;
    ExactMatrix basis;       // n x k, independent columns
    ExactMatrix projector;   // onto F0
    ExactMatrix complement;  // n x (n-k) basis of F0-perp

    size_t dim() const { return basis.cols(); }
    static Subspace standard(size_t n, size_t k);
    static Subspace from_basis(size_t n, const ExactMatrix& basis);
};

/// True when v(z) lies in the subspace for every z (coefficient test, exact).
bool mero_in_subspace(const MeroVector& v, const ExactMatrix& projector);

struct F0Array {
    Subspace f0;
    MeroGrid entries;
    std::vector<ColumnPattern> patterns;

    size_t n() const { return f0.n; }
    size_t k() const { return f0.dim(); }
    size_t r() const { return entries.size(); }
};

/// Validates shapes and the alternating pattern; throws PatternViolation or BadArguments.
F0Array make_f0_array(const Subspace& f0, MeroGrid entries);

ColumnPattern classify_column(const Subspace& f0, const MeroGrid& grid, size_t column,
                              std::optional<size_t>* offending_row = nullptr);

}  // namespace uniton
