#pragma once

#include <vector>

#include "uniton/engine/chain.hpp"
#include "uniton/verify/report.hpp"

namespace uniton {

/// phi_i = phi_i^* and phi_i^2 = I exactly; unitarity is recorded in the details.
CheckReport check_unitary_involution(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points);

/// alpha_{i+1} = (alpha_{i+1} cap F_i) + (alpha_{i+1} cap F_i^perp) and [pi_{F_i}, pi_{i+1}] = 0; 0 <= i < r.
CheckReport check_splitting(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points);

/// S^i_j pi_{F_0} e_m in F_i for j even, in F_i^perp for j odd, and the reverse for pi_{F_0}^perp.
CheckReport check_sij_images(const UnitonChain& chain, size_t i, const std::vector<GaussRat>& points);

/// Exact and binary128 phi_0 .. phi_r agree to the relative tolerance.
CheckReport check_backend_consistency(const UnitonChain& chain, const std::vector<GaussRat>& points,
                                      double tol = 1e-9);

}  // namespace uniton
