#include "uniton/engine/evaluation.hpp"

namespace uniton {

HValues<GaussRat> exact_h_values(const UnitonChain& chain, const GaussRat& z) {
    const size_t r = chain.r(), n = chain.n();
    HValues<GaussRat> out(r);
    for (size_t k = 0; k < r; ++k) {
        out[k].resize(r - k);
        for (size_t m = 0; m + k < r; ++m) {
            out[k][m].resize(n);
            for (size_t j = 0; j < n; ++j) out[k][m][j] = evaluate(chain.h_derivative(k, m, j), z);
        }
    }
    return out;
}

ChainPoint<GaussRat> evaluate_exact(const UnitonChain& chain, const GaussRat& z, const EvalOptions& opt) {
    return evaluate_chain<GaussRat>(chain, z, exact_h_values(chain, z), opt);
}

ExactMatrix evaluate_phi(const UnitonChain& chain, size_t i, const GaussRat& z) {
    if (i > chain.r()) throw OutOfRange("phi index beyond the chain length");
    return evaluate_exact(chain, z).phi[i];
}

std::vector<Frame<GaussRat>> f_chain(const UnitonChain& chain, const GaussRat& z) {
    return f_chain(evaluate_exact(chain, z), true);
}

template class FloatChainData<cdouble>;
template class FloatChainData<cquad>;
template ChainPoint<cdouble> evaluate_chain<cdouble>(const UnitonChain&, const cdouble&, HValues<cdouble>,
                                                     const EvalOptions&);
template ChainPoint<cquad> evaluate_chain<cquad>(const UnitonChain&, const cquad&, HValues<cquad>,
                                                 const EvalOptions&);

}  // namespace uniton
