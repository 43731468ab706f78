#include "uniton/numeric/exact_linalg.hpp"

#include <limits>

#include "uniton/numeric/errors.hpp"

namespace uniton {

std::vector<size_t> rref_in_place(ExactMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t best = m.rows();
        size_t best_bits = std::numeric_limits<size_t>::max();
        for (size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            size_t b = m(r, col).bits();
            if (b < best_bits) {
                best = r;
                best_bits = b;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
        const GaussRat inv = GaussRat(1) / m(row, col);
        for (size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const GaussRat f = m(r, col);
            for (size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t exact_rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ExactMatrix t = m.rows() < m.cols() ? m : m.transpose();
    return rref_in_place(t).size();
}

ExactMatrix column_basis(const ExactMatrix& m) {
    ExactMatrix t = m.transpose();
    size_t r = rref_in_place(t).size();
    ExactMatrix out(m.rows(), r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < m.rows(); ++i) out(i, j) = t(j, i);
    return out;
}

ExactMatrix kernel(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<size_t> piv = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : piv) is_pivot[p] = true;
    ExactMatrix out(m.cols(), m.cols() - piv.size());
    size_t k = 0;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out(f, k) = GaussRat(1);
        for (size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -r(i, f);
        ++k;
    }
    return out;
}

ExactMatrix exact_projector(const ExactMatrix& spanning, size_t ambient) {
    if (spanning.cols() == 0) return ExactMatrix(ambient, ambient);
    if (spanning.rows() != ambient) throw BadArguments("frame ambient dimension mismatch");
    ExactMatrix b = column_basis(spanning);
    if (b.cols() == 0) return ExactMatrix(ambient, ambient);
    ExactMatrix bh = b.adjoint();
    ExactMatrix gram = bh * b;
    // Solve gram * X = b^*, then P = b X.
    ExactMatrix aug(gram.rows(), gram.cols() + bh.cols());
    for (size_t i = 0; i < gram.rows(); ++i) {
        for (size_t j = 0; j < gram.cols(); ++j) aug(i, j) = gram(i, j);
        for (size_t j = 0; j < bh.cols(); ++j) aug(i, gram.cols() + j) = bh(i, j);
    }
    rref_in_place(aug);
    ExactMatrix x(gram.rows(), bh.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) x(i, j) = aug(i, gram.cols() + j);
    return b * x;
}

ExactMatrix exact_meet(const ExactMatrix& a, const ExactMatrix& b, size_t ambient) {
    ExactMatrix ba = column_basis(a), bb = column_basis(b);
    if (ba.cols() == 0 || bb.cols() == 0) return ExactMatrix(ambient, 0);
    ExactMatrix stacked = hstack(ba, -bb);
    ExactMatrix ker = kernel(stacked);
    ExactMatrix top(ba.cols(), ker.cols());
    for (size_t i = 0; i < ba.cols(); ++i)
        for (size_t j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
    return column_basis(ba * top);
}

ExactMatrix exact_join(const ExactMatrix& a, const ExactMatrix& b, size_t ambient) {
    if (a.cols() == 0 && b.cols() == 0) return ExactMatrix(ambient, 0);
    return column_basis(hstack(a, b));
}

ExactMatrix exact_orthocomplement(const ExactMatrix& a, size_t ambient) {
    if (a.cols() == 0) return ExactMatrix::identity(ambient);
    return column_basis(kernel(a.adjoint()));
}

bool exact_contains(const ExactMatrix& a, const ExactMatrix& b) {
    if (b.cols() == 0) return true;
    return exact_rank(hstack(a, b)) == exact_rank(a);
}

bool exact_same_span(const ExactMatrix& a, const ExactMatrix& b) {
    return column_basis(a) == column_basis(b);
}

ExactMatrix exact_inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw BadArguments("inverse of a non-square matrix");
    const size_t n = m.rows();
    ExactMatrix aug = hstack(m, ExactMatrix::identity(n));
    std::vector<size_t> piv = rref_in_place(aug);
    if (piv.size() < n || piv[n - 1] >= n)
        throw BadArguments("singular matrix");
    ExactMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

bool is_zero_matrix(const ExactMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

ExactMatrix column_matrix(const ExactVector& v) {
    ExactMatrix m(v.size(), 1);
    m.set_column(0, v);
    return m;
}

}  // namespace uniton
