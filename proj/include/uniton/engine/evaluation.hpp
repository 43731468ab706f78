#pragma once

#include <string>
#include <vector>

#include "uniton/engine/chain.hpp"
#include "uniton/numeric/errors.hpp"
#include "uniton/numeric/frame.hpp"

namespace uniton {

/// Values H^{(k)}_{m,j}(z) indexed [k][m][j], each a vector of length n.
template <class T>
using HValues = std::vector<std::vector<std::vector<std::vector<T>>>>;

HValues<GaussRat> exact_h_values(const UnitonChain& chain, const GaussRat& z);

/// Floating-point copy of the chain's derivative table.
template <class C>
class FloatChainData {
public:
    explicit FloatChainData(const UnitonChain& chain);
    HValues<C> values(const C& z) const;
    size_t n() const { return n_; }
    size_t r() const { return r_; }

private:
    struct Entry {
        std::vector<C> num, den;
    };
    size_t n_ = 0, r_ = 0;
    std::vector<std::vector<std::vector<std::vector<Entry>>>> table_;  // [k][m][j][coord]
};

/// C^i_s by the Pascal recursion; pis[l-1] = pi_l. Zero outside 0 <= s <= i.
template <class T>
Matrix<T> elementary_C(long i, long s, const std::vector<Matrix<T>>& pis, size_t n);

/// S^i_j = pi_i S^{i-1}_j + pi_i^perp S^{i-1}_{j-1}, S^0_0 = I.
template <class T>
Matrix<T> elementary_S(long i, long j, const std::vector<Matrix<T>>& pis, size_t n);

/// Full table C[i][s] for 0 <= s <= i <= upto.
template <class T>
std::vector<std::vector<Matrix<T>>> pascal_table(const std::vector<Matrix<T>>& pis, size_t upto, size_t n);

template <class T>
struct ChainPoint {
    T z{};
    size_t n = 0, r = 0;
    int q_sign = 1;
    Matrix<T> f0_projector;
    HValues<T> h;
    /// sections[i] holds alpha^{(k)}_{i+1,j} in column k*n + j (zero columns kept).
    std::vector<Matrix<T>> sections;
    std::vector<Matrix<T>> alpha_basis;  // basis of alpha_{i+1}
    std::vector<Matrix<T>> pi;           // pi[i] = projector onto alpha_{i+1}
    std::vector<size_t> alpha_ranks;
    std::vector<std::vector<Matrix<T>>> C;  // C[i][s], 0 <= s <= i <= r
    std::vector<Matrix<T>> phi;             // phi_0 .. phi_r

    Matrix<T> pi_perp(size_t l) const { return Matrix<T>::identity(n) - pi[l - 1]; }
    /// Projector onto the effective F_0 (F0-perp when Q_sign = -1).
    Matrix<T> f0_effective() const {
        return q_sign > 0 ? f0_projector : Matrix<T>::identity(n) - f0_projector;
    }
};

struct EvalOptions {
    /// Throw RankDropAtPoint when a frame rank differs from the recorded generic rank.
    bool check_generic_ranks = true;
};

template <class T>
ChainPoint<T> evaluate_chain(const UnitonChain& chain, const T& z, HValues<T> h, const EvalOptions& opt = {});

ChainPoint<GaussRat> evaluate_exact(const UnitonChain& chain, const GaussRat& z, const EvalOptions& opt = {});

/// Spanning frame of alpha_{i+1} at the point, zero columns dropped; order k ascending then j.
template <class T>
Frame<T> build_alpha(const ChainPoint<T>& cp, size_t i);

/// phi_i = Q (pi_1 - pi_1^perp) ... (pi_i - pi_i^perp).
ExactMatrix evaluate_phi(const UnitonChain& chain, size_t i, const GaussRat& z);

/// F_0 .. F_r; throws SplitFailure if some alpha_i is not split by F_{i-1}.
template <class T>
std::vector<Frame<T>> f_chain(const ChainPoint<T>& cp, bool require_split = true);

std::vector<Frame<GaussRat>> f_chain(const UnitonChain& chain, const GaussRat& z);

}  // namespace uniton

#include "uniton/engine/evaluation_impl.hpp"
