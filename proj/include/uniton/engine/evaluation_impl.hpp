#pragma once

// Template definitions for evaluation.hpp.

namespace uniton {

template <class C>
FloatChainData<C>::FloatChainData(const UnitonChain& chain) : n_(chain.n()), r_(chain.r()) {
    auto convert = [](const Poly& p) {
        std::vector<C> out;
        for (const auto& c : p.coeffs()) out.push_back(to_complex<C>(c));
        return out;
    };
    table_.resize(r_);
    for (size_t k = 0; k < r_; ++k) {
        table_[k].resize(r_ - k);
        for (size_t m = 0; m + k < r_; ++m) {
            table_[k][m].resize(n_);
            for (size_t j = 0; j < n_; ++j) {
                const MeroVector& v = chain.h_derivative(k, m, j);
                for (const auto& f : v) table_[k][m][j].push_back({convert(f.num()), convert(f.den())});
            }
        }
    }
}

template <class C>
HValues<C> FloatChainData<C>::values(const C& z) const {
    using R = Real<C>;
    using std::sqrt;
    const R az = sqrt(abs2(z));
    auto horner = [&](const std::vector<C>& p, R& scale) {
        C acc = C(0);
        scale = 0;
        R zp = 1;
        for (size_t d = p.size(); d-- > 0;) acc = acc * z + p[d];
        for (const auto& c : p) {
            scale += sqrt(abs2(c)) * zp;
            zp *= az;
        }
        return acc;
    };
    HValues<C> out(r_);
    for (size_t k = 0; k < r_; ++k) {
        out[k].resize(r_ - k);
        for (size_t m = 0; m + k < r_; ++m) {
            out[k][m].resize(n_);
            for (size_t j = 0; j < n_; ++j) {
                auto& vec = out[k][m][j];
                vec.assign(n_, C(0));
                for (size_t c = 0; c < n_; ++c) {
                    const Entry& e = table_[k][m][j][c];
                    if (e.num.empty()) continue;
                    R ds = 0, ns = 0;
                    C d = horner(e.den, ds);
                    if (sqrt(abs2(d)) <= R(1e-24) * ds) throw PoleAtPoint("pole near the evaluation point");
                    vec[c] = horner(e.num, ns) / d;
                }
            }
        }
    }
    return out;
}

template <class T>
std::vector<std::vector<Matrix<T>>> pascal_table(const std::vector<Matrix<T>>& pis, size_t upto, size_t n) {
    if (upto > pis.size()) throw OutOfRange("pascal table needs pi_1 .. pi_i");
    std::vector<std::vector<Matrix<T>>> c(upto + 1);
    c[0].push_back(Matrix<T>::identity(n));
    for (size_t i = 1; i <= upto; ++i) {
        Matrix<T> perp = Matrix<T>::identity(n) - pis[i - 1];
        c[i].resize(i + 1);
        for (size_t s = 0; s <= i; ++s) {
            Matrix<T> m = s < i ? c[i - 1][s] : Matrix<T>(n, n);
            if (s >= 1) m += perp * c[i - 1][s - 1];
            c[i][s] = std::move(m);
        }
    }
    return c;
}

template <class T>
Matrix<T> elementary_C(long i, long s, const std::vector<Matrix<T>>& pis, size_t n) {
    if (i < 0 || s < 0 || s > i) return Matrix<T>(n, n);
    if (static_cast<size_t>(i) > pis.size()) throw OutOfRange("C^i_s needs i projectors");
    return pascal_table(pis, static_cast<size_t>(i), n)[static_cast<size_t>(i)][static_cast<size_t>(s)];
}

template <class T>
Matrix<T> elementary_S(long i, long j, const std::vector<Matrix<T>>& pis, size_t n) {
    if (i < 0 || j < 0 || j > i) return Matrix<T>(n, n);
    if (static_cast<size_t>(i) > pis.size()) throw OutOfRange("S^i_j needs i projectors");
    std::vector<Matrix<T>> row{Matrix<T>::identity(n)};
    for (long l = 1; l <= i; ++l) {
        const Matrix<T>& p = pis[static_cast<size_t>(l - 1)];
        Matrix<T> perp = Matrix<T>::identity(n) - p;
        std::vector<Matrix<T>> next(static_cast<size_t>(l) + 1, Matrix<T>(n, n));
        for (long t = 0; t <= l; ++t) {
            if (t < l) next[static_cast<size_t>(t)] += p * row[static_cast<size_t>(t)];
            if (t >= 1) next[static_cast<size_t>(t)] += perp * row[static_cast<size_t>(t - 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(j)];
}

template <class T>
ChainPoint<T> evaluate_chain(const UnitonChain& chain, const T& z, HValues<T> h, const EvalOptions& opt) {
    const size_t n = chain.n(), r = chain.r();
    ChainPoint<T> cp;
    cp.z = z;
    cp.n = n;
    cp.r = r;
    cp.q_sign = chain.q_sign();
    if constexpr (Linalg<T>::exact)
        cp.f0_projector = chain.f0().projector;
    else
        cp.f0_projector = to_float<T>(chain.f0().projector);
    cp.h = std::move(h);

    const Matrix<T> id = Matrix<T>::identity(n);
    cp.C.push_back({id});
    for (size_t i = 0; i < r; ++i) {
        Matrix<T> sec(n, (i + 1) * n);
        for (size_t k = 0; k <= i; ++k)
            for (size_t j = 0; j < n; ++j) {
                std::vector<T> col(n, T(0));
                for (size_t s = k; s <= i; ++s) {
                    const auto& hv = cp.h[k][s - k][j];
                    std::vector<T> add = cp.C[i][s] * hv;
                    for (size_t c = 0; c < n; ++c) col[c] += add[c];
                }
                sec.set_column(k * n + j, col);
            }
        Matrix<T> basis = Linalg<T>::basis(sec);
        cp.alpha_ranks.push_back(basis.cols());
        cp.pi.push_back(Linalg<T>::projector_from_basis(basis, n));
        cp.alpha_basis.push_back(std::move(basis));
        cp.sections.push_back(std::move(sec));

        Matrix<T> perp = id - cp.pi.back();
        std::vector<Matrix<T>> next(i + 2);
        for (size_t s = 0; s <= i + 1; ++s) {
            Matrix<T> m = s <= i ? cp.C[i][s] : Matrix<T>(n, n);
            if (s >= 1) m += perp * cp.C[i][s - 1];
            next[s] = std::move(m);
        }
        cp.C.push_back(std::move(next));
    }

    if (opt.check_generic_ranks && chain.profile()) {
        const auto& g = chain.profile()->alpha_ranks;
        for (size_t i = 0; i < r; ++i)
            if (cp.alpha_ranks[i] != g[i])
                throw RankDropAtPoint("rank alpha_" + std::to_string(i + 1) + " is " +
                                      std::to_string(cp.alpha_ranks[i]) + ", generic rank " +
                                      std::to_string(g[i]));
    }

    Matrix<T> q = cp.f0_projector * T(2) - id;
    if (cp.q_sign < 0) q = -q;
    cp.phi.push_back(q);
    for (size_t i = 0; i < r; ++i) cp.phi.push_back(cp.phi.back() * (cp.pi[i] * T(2) - id));
    return cp;
}

template <class T>
Frame<T> build_alpha(const ChainPoint<T>& cp, size_t i) {
    if (i >= cp.r) throw OutOfRange("alpha index beyond the chain length");
    std::vector<size_t> keep;
    const Matrix<T>& s = cp.sections[i];
    for (size_t c = 0; c < s.cols(); ++c) {
        bool zero = true;
        for (size_t row = 0; row < s.rows() && zero; ++row) zero = s(row, c) == T(0);
        if (!zero) keep.push_back(c);
    }
    return {s.select_columns(keep), cp.z};
}

template <class T>
std::vector<Frame<T>> f_chain(const ChainPoint<T>& cp, bool require_split) {
    const size_t n = cp.n;
    Matrix<T> f = Linalg<T>::basis(cp.f0_effective());
    std::vector<Frame<T>> out{{f, cp.z}};
    for (size_t i = 1; i <= cp.r; ++i) {
        const Matrix<T>& a = cp.alpha_basis[i - 1];
        Matrix<T> a_perp = Linalg<T>::complement(a, n);
        Matrix<T> f_perp = Linalg<T>::complement(f, n);
        Matrix<T> m1 = Linalg<T>::meet(f, a, n);
        Matrix<T> m2 = Linalg<T>::meet(f_perp, a_perp, n);
        if (require_split) {
            size_t split = m1.cols() + Linalg<T>::meet(f_perp, a, n).cols();
            if (split != a.cols())
                throw SplitFailure("alpha_" + std::to_string(i) + " is not split by F_" + std::to_string(i - 1));
        }
        f = Linalg<T>::join(m1, m2, n);
        out.push_back({f, cp.z});
    }
    return out;
}

}  // namespace uniton
