#include "uniton/engine/f0_array.hpp"

#include <algorithm>
#include <string>

#include "uniton/numeric/errors.hpp"

namespace uniton {

Subspace Subspace::standard(size_t n, size_t k) {
    if (k > n) throw BadArguments("dim F0 exceeds n");
    ExactMatrix b(n, k);
    for (size_t j = 0; j < k; ++j) b(j, j) = GaussRat(1);
    return from_basis(n, b);
}

Subspace Subspace::from_basis(size_t n, const ExactMatrix& basis) {
    if (basis.rows() != n) throw BadArguments("F0 basis vectors must have length n");
    if (exact_rank(basis) != basis.cols()) throw BadArguments("F0 basis vectors are dependent");
    Subspace s;
    s.n = n;
    s.basis = basis;
    s.projector = exact_projector(basis, n);
    s.complement = exact_orthocomplement(basis, n);
    return s;
}

bool mero_in_subspace(const MeroVector& v, const ExactMatrix& projector) {
    if (is_zero(v)) return true;
    for (const auto& c : coefficient_vectors(v))
        if (projector * c != c) return false;
    return true;
}

ColumnPattern classify_column(const Subspace& f0, const MeroGrid& grid, size_t column,
                              std::optional<size_t>* offending_row) {
    const ExactMatrix perp = ExactMatrix::identity(f0.n) - f0.projector;
    bool even_f0 = true, even_perp = true, all_zero = true;
    std::optional<size_t> bad_a, bad_b;
    for (size_t row = 0; row < grid.size(); ++row) {
        const MeroVector& v = grid[row][column];
        if (is_zero(v)) continue;
        all_zero = false;
        bool in_f0 = mero_in_subspace(v, f0.projector);
        bool in_perp = mero_in_subspace(v, perp);
        bool want_f0_a = row % 2 == 0;
        if (!(want_f0_a ? in_f0 : in_perp) && even_f0) {
            even_f0 = false;
            bad_a = row;
        }
        if (!(want_f0_a ? in_perp : in_f0) && even_perp) {
            even_perp = false;
            bad_b = row;
        }
    }
    if (all_zero) return ColumnPattern::Zero;
    if (even_f0) return ColumnPattern::EvenInF0;
    if (even_perp) return ColumnPattern::EvenInF0Perp;
    if (offending_row) *offending_row = std::max(*bad_a, *bad_b);
    throw PatternViolation("column " + std::to_string(column + 1) + " breaks the F0 alternation at row " +
                           std::to_string(std::max(*bad_a, *bad_b)));
}

F0Array make_f0_array(const Subspace& f0, MeroGrid entries) {
    for (const auto& row : entries) {
        if (row.size() != f0.n) throw BadArguments("each array row needs n entries");
        for (const auto& v : row)
            if (v.size() != f0.n) throw BadArguments("array entries must be vectors of length n");
    }
    F0Array a{f0, std::move(entries), {}};
    for (size_t j = 0; j < f0.n; ++j) a.patterns.push_back(classify_column(f0, a.entries, j));
    return a;
}

}  // namespace uniton
