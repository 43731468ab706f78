#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "uniton/numeric/complex_traits.hpp"
#include "uniton/numeric/exact_linalg.hpp"
#include "uniton/numeric/matrix.hpp"

namespace uniton {

/// Relative singular-value threshold used for numerical rank.
inline constexpr double kFloatRankThreshold = 1e-8;

template <class C>
using Real = typename ComplexTraits<C>::real;

template <class C>
Matrix<C> to_float(const ExactMatrix& m) {
    Matrix<C> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = to_complex<C>(m(i, j));
    return out;
}

template <class C>
Real<C> abs2(const C& x) {
    using std::real;
    using std::imag;
    Real<C> a = real(x), b = imag(x);
    return a * a + b * b;
}

template <class C>
Real<C> vector_norm(const std::vector<C>& v) {
    using std::sqrt;
    Real<C> s = 0;
    for (const auto& x : v) s += abs2(x);
    return sqrt(s);
}

template <class C>
Real<C> column_norm(const Matrix<C>& m, size_t j) {
    using std::sqrt;
    Real<C> s = 0;
    for (size_t i = 0; i < m.rows(); ++i) s += abs2(m(i, j));
    return sqrt(s);
}

/// Largest column norm; for operators this bounds the action on unit basis vectors.
template <class C>
Real<C> max_column_norm(const Matrix<C>& m) {
    Real<C> best = 0;
    for (size_t j = 0; j < m.cols(); ++j) best = std::max(best, column_norm(m, j));
    return best;
}

template <class C>
Real<C> max_abs_entry(const Matrix<C>& m) {
    using std::sqrt;
    Real<C> best = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) best = std::max(best, abs2(m(i, j)));
    return sqrt(best);
}

template <class C>
struct Svd {
    Matrix<C> u;                 // columns scaled to unit length where sigma > 0
    std::vector<Real<C>> sigma;  // descending
    Matrix<C> v;                 // square, unitary
};

/// One-sided Jacobi (Hestenes) SVD.
template <class C>
Svd<C> jacobi_svd(const Matrix<C>& m) {
    using std::sqrt;
    using std::abs;
    using R = Real<C>;
    const size_t rows = m.rows(), cols = m.cols();
    Matrix<C> a = m;
    Matrix<C> v = Matrix<C>::identity(cols);
    const R eps = std::numeric_limits<R>::epsilon();

    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (size_t p = 0; p + 1 < cols; ++p) {
            for (size_t q = p + 1; q < cols; ++q) {
                R alpha = 0, beta = 0;
                C gamma = C(0);
                for (size_t i = 0; i < rows; ++i) {
                    alpha += abs2(a(i, p));
                    beta += abs2(a(i, q));
                    using std::conj;
                    gamma += conj(a(i, p)) * a(i, q);
                }
                R g = sqrt(abs2(gamma));
                if (g == 0 || g <= eps * sqrt(alpha * beta)) continue;
                rotated = true;
                C phase = gamma / C(g);
                using std::conj;
                C phase_bar = conj(phase);
                R zeta = (beta - alpha) / (2 * g);
                R t = (zeta >= 0 ? R(1) : R(-1)) / (abs(zeta) + sqrt(R(1) + zeta * zeta));
                R c = R(1) / sqrt(R(1) + t * t);
                R s = c * t;
                for (size_t i = 0; i < rows; ++i) {
                    C ap = a(i, p), bq = a(i, q) * phase_bar;
                    a(i, p) = C(c) * ap - C(s) * bq;
                    a(i, q) = C(s) * ap + C(c) * bq;
                }
                for (size_t i = 0; i < cols; ++i) {
                    C vp = v(i, p), vq = v(i, q) * phase_bar;
                    v(i, p) = C(c) * vp - C(s) * vq;
                    v(i, q) = C(s) * vp + C(c) * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<R> norms(cols);
    for (size_t j = 0; j < cols; ++j) norms[j] = column_norm(a, j);
    std::vector<size_t> order(cols);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return norms[x] > norms[y]; });

    Svd<C> out{Matrix<C>(rows, cols), std::vector<R>(cols), Matrix<C>(cols, cols)};
    for (size_t k = 0; k < cols; ++k) {
        size_t j = order[k];
        out.sigma[k] = norms[j];
        for (size_t i = 0; i < cols; ++i) out.v(i, k) = v(i, j);
        if (norms[j] > 0)
            for (size_t i = 0; i < rows; ++i) out.u(i, k) = a(i, j) / C(norms[j]);
    }
    return out;
}

template <class C>
size_t numerical_rank(const std::vector<Real<C>>& sigma) {
    if (sigma.empty() || sigma.front() == 0) return 0;
    const Real<C> thr = Real<C>(kFloatRankThreshold) * sigma.front();
    size_t r = 0;
    for (const auto& s : sigma)
        if (s > thr) ++r;
    return r;
}

template <class C>
size_t float_rank(const Matrix<C>& m) {
    if (m.cols() == 0 || m.rows() == 0) return 0;
    return numerical_rank<C>(jacobi_svd(m).sigma);
}

/// Orthonormal basis of the numerical column space.
template <class C>
Matrix<C> float_column_basis(const Matrix<C>& m) {
    if (m.cols() == 0) return Matrix<C>(m.rows(), 0);
    Svd<C> s = jacobi_svd(m);
    size_t r = numerical_rank<C>(s.sigma);
    Matrix<C> out(m.rows(), r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < m.rows(); ++i) out(i, j) = s.u(i, j);
    return out;
}

template <class C>
Matrix<C> float_projector(const Matrix<C>& spanning, size_t ambient) {
    Matrix<C> u = float_column_basis(spanning);
    if (u.cols() == 0) return Matrix<C>(ambient, ambient);
    return u * u.adjoint();
}

template <class C>
Matrix<C> float_kernel(const Matrix<C>& m) {
    if (m.rows() == 0) return Matrix<C>::identity(m.cols());
    Svd<C> s = jacobi_svd(m);
    size_t r = numerical_rank<C>(s.sigma);
    Matrix<C> out(m.cols(), m.cols() - r);
    for (size_t j = r; j < m.cols(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) out(i, j - r) = s.v(i, j);
    return out;
}

template <class C>
Matrix<C> float_orthocomplement(const Matrix<C>& a, size_t ambient) {
    Matrix<C> u = float_column_basis(a);
    if (u.cols() == 0) return Matrix<C>::identity(ambient);
    // Kernel of u^*: I - P would be pure roundoff when a spans everything.
    return float_kernel(u.adjoint());
}

template <class C>
Matrix<C> float_join(const Matrix<C>& a, const Matrix<C>& b, size_t ambient) {
    if (a.cols() == 0 && b.cols() == 0) return Matrix<C>(ambient, 0);
    return float_column_basis(hstack(a, b));
}

template <class C>
Matrix<C> float_meet(const Matrix<C>& a, const Matrix<C>& b, size_t ambient) {
    Matrix<C> ua = float_column_basis(a), ub = float_column_basis(b);
    if (ua.cols() == 0 || ub.cols() == 0) return Matrix<C>(ambient, 0);
    Matrix<C> ker = float_kernel(hstack(ua, -ub));
    Matrix<C> top(ua.cols(), ker.cols());
    for (size_t i = 0; i < ua.cols(); ++i)
        for (size_t j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
    return float_column_basis(ua * top);
}

}  // namespace uniton
