#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniton/engine/chain.hpp"

namespace uniton {

/// Subspace of C^{rn} at a point; block b of a vector is the coefficient of lambda^b.
struct ModelSpace {
    GaussRat point;
    size_t blocks = 0;
    size_t ambient = 0;
    std::vector<MeroVector> sections;  // spanning sections, length blocks * ambient
    ExactMatrix basis;                 // canonical basis of their span at the point

    size_t dim() const { return basis.cols(); }
};

/// Which spanning data feeds X: K-columns (X-tilde) or R_i = sum_{s<=i} K_s (X).
enum class ModelSource { KTilde, R };

/// Stacks column j of each row into one vector (row_0[j], ..., row_{b-1}[j]).
std::vector<MeroVector> block_columns(const MeroGrid& rows);

/// Multiplication by lambda^by modulo lambda^blocks.
MeroVector shift_blocks(const MeroVector& v, size_t blocks, size_t n, size_t by);

/// X + lambda X_(1) + ... + lambda^{jet} X_(jet).
std::vector<MeroVector> model_sections(const std::vector<MeroVector>& x, size_t blocks, size_t n, size_t jet_order);

ModelSpace model_from_sections(std::vector<MeroVector> sections, size_t blocks, size_t n, const GaussRat& z0);

/// Grassmannian model of the chain at z0; jet_order defaults to r - 1. Raw H data only supports ModelSource::R.
ModelSpace model_space(const UnitonChain& chain, const GaussRat& z0, std::optional<size_t> jet_order = std::nullopt,
                       ModelSource source = ModelSource::KTilde);

/// Phi(H_+) modulo lambda^r H_+ at z0.
ExactMatrix phi_hplus(const UnitonChain& chain, const GaussRat& z0);

struct ShiftReport {
    bool stable = false;
    size_t rank_w = 0;
    size_t rank_union = 0;  // rank of W together with lambda W_(1)
};

/// lambda W_(1) in W as the exact rank equality rank W = rank(W + lambda W_(1)).
ShiftReport shift_stability(const ModelSpace& w);

struct AdaptedClass {
    bool type_i = false;   // even blocks in F0, odd blocks in F0-perp
    bool type_ii = false;  // reverse
    bool adapted() const { return type_i || type_ii; }
    std::string label() const;
};

struct AdaptedReport {
    std::vector<AdaptedClass> vectors;
    bool all_adapted() const;
};

AdaptedReport f0_adapted_check(const std::vector<ExactVector>& vectors, size_t blocks, const ExactMatrix& f0_projector);
/// Same classification for polynomial sections, exact in z.
AdaptedReport f0_adapted_check(const std::vector<MeroVector>& sections, size_t blocks, const ExactMatrix& f0_projector);

}  // namespace uniton
