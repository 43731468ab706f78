#pragma once

#include "uniton/numeric/errors.hpp"
#include "uniton/numeric/exact_linalg.hpp"
#include "uniton/numeric/float_linalg.hpp"

namespace uniton {

/// Backend dispatch for subspace operations, exact or floating point.
template <class T>
struct Linalg {
    static constexpr bool exact = false;
    static Matrix<T> projector(const Matrix<T>& span, size_t n) { return float_projector(span, n); }
    /// basis() output is orthonormal here, so the projector is u u^*.
    static Matrix<T> projector_from_basis(const Matrix<T>& b, size_t n) {
        return b.cols() == 0 ? Matrix<T>(n, n) : b * b.adjoint();
    }
    static size_t rank(const Matrix<T>& m) { return float_rank(m); }
    static Matrix<T> basis(const Matrix<T>& m) { return float_column_basis(m); }
    static Matrix<T> meet(const Matrix<T>& a, const Matrix<T>& b, size_t n) { return float_meet(a, b, n); }
    static Matrix<T> join(const Matrix<T>& a, const Matrix<T>& b, size_t n) { return float_join(a, b, n); }
    static Matrix<T> complement(const Matrix<T>& a, size_t n) { return float_orthocomplement(a, n); }
};

template <>
struct Linalg<GaussRat> {
    static constexpr bool exact = true;
    static ExactMatrix projector(const ExactMatrix& span, size_t n) { return exact_projector(span, n); }
    static ExactMatrix projector_from_basis(const ExactMatrix& b, size_t n) { return exact_projector(b, n); }
    static size_t rank(const ExactMatrix& m) { return exact_rank(m); }
    static ExactMatrix basis(const ExactMatrix& m) { return column_basis(m); }
    static ExactMatrix meet(const ExactMatrix& a, const ExactMatrix& b, size_t n) { return exact_meet(a, b, n); }
    static ExactMatrix join(const ExactMatrix& a, const ExactMatrix& b, size_t n) { return exact_join(a, b, n); }
    static ExactMatrix complement(const ExactMatrix& a, size_t n) { return exact_orthocomplement(a, n); }
};

/// Spanning columns of a subspace of C^n together with the evaluation point.
template <class T>
struct Frame {
    Matrix<T> columns;
    T point{};

    size_t ambient() const { return columns.rows(); }
};

template <class T>
Matrix<T> project_onto(const Frame<T>& f) {
    return Linalg<T>::projector(f.columns, f.ambient());
}

template <class T>
size_t subspace_rank(const Frame<T>& f) {
    return Linalg<T>::rank(f.columns);
}

template <class T>
void require_compatible(const Frame<T>& a, const Frame<T>& b) {
    if (a.ambient() != b.ambient()) throw BadArguments("frames live in different ambient spaces");
    if (!(a.point == b.point)) throw BadArguments("frames evaluated at different points");
}

template <class T>
Frame<T> subspace_meet(const Frame<T>& a, const Frame<T>& b) {
    require_compatible(a, b);
    return {Linalg<T>::meet(a.columns, b.columns, a.ambient()), a.point};
}

template <class T>
Frame<T> subspace_join(const Frame<T>& a, const Frame<T>& b) {
    require_compatible(a, b);
    return {Linalg<T>::join(a.columns, b.columns, a.ambient()), a.point};
}

template <class T>
Frame<T> orthocomplement(const Frame<T>& a) {
    return {Linalg<T>::complement(a.columns, a.ambient()), a.point};
}

}  // namespace uniton
