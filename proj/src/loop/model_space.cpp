#include "uniton/loop/model_space.hpp"

#include "uniton/engine/evaluation.hpp"
#include "uniton/loop/extended_solution.hpp"
#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

ExactMatrix evaluate_all(const std::vector<MeroVector>& sections, size_t dim, const GaussRat& z) {
    std::vector<ExactVector> cols;
    for (const auto& s : sections) cols.push_back(evaluate(s, z));
    return ExactMatrix::from_columns(dim, cols);
}

ExactMatrix shifted(const ExactMatrix& m, size_t blocks, size_t n) {
    ExactMatrix out(m.rows(), m.cols());
    for (size_t c = 0; c < m.cols(); ++c)
        for (size_t row = 0; row + n < blocks * n; ++row) out(row + n, c) = m(row, c);
    return out;
}

}  // namespace

std::vector<MeroVector> block_columns(const MeroGrid& rows) {
    if (rows.empty()) return {};
    const size_t b = rows.size(), cols = rows[0].size();
    std::vector<MeroVector> out;
    for (size_t j = 0; j < cols; ++j) {
        MeroVector v;
        for (size_t i = 0; i < b; ++i) v.insert(v.end(), rows[i][j].begin(), rows[i][j].end());
        out.push_back(std::move(v));
    }
    return out;
}

MeroVector shift_blocks(const MeroVector& v, size_t blocks, size_t n, size_t by) {
    if (v.size() != blocks * n) throw BadArguments("block vector has the wrong length");
    MeroVector out(v.size());
    for (size_t idx = 0; idx + by * n < v.size(); ++idx) out[idx + by * n] = v[idx];
    return out;
}

std::vector<MeroVector> model_sections(const std::vector<MeroVector>& x, size_t blocks, size_t n, size_t jet_order) {
    std::vector<MeroVector> out;
    for (const auto& s : x) {
        if (is_zero(s)) continue;
        std::vector<MeroVector> jets{s};
        for (size_t m = 1; m <= jet_order && m < blocks; ++m) jets.push_back(derivative(jets.back()));
        for (size_t i = 0; i <= jet_order && i < blocks; ++i)
            for (size_t m = 0; m <= i; ++m) {
                MeroVector v = shift_blocks(jets[m], blocks, n, i);
                if (!is_zero(v)) out.push_back(std::move(v));
            }
    }
    return out;
}

ModelSpace model_from_sections(std::vector<MeroVector> sections, size_t blocks, size_t n, const GaussRat& z0) {
    for (const auto& s : sections)
        if (s.size() != blocks * n) throw BadArguments("model section has the wrong length");
    ModelSpace w;
    w.point = z0;
    w.blocks = blocks;
    w.ambient = n;
    w.basis = column_basis(evaluate_all(sections, blocks * n, z0));
    w.sections = std::move(sections);
    return w;
}

ModelSpace model_space(const UnitonChain& chain, const GaussRat& z0, std::optional<size_t> jet_order,
                       ModelSource source) {
    const size_t r = chain.r(), n = chain.n();
    const size_t jet = jet_order.value_or(r - 1);
    std::vector<MeroVector> x;
    if (source == ModelSource::KTilde) {
        if (!chain.k()) throw BadArguments("X-tilde needs K data; raw H data only has the R route");
        x = block_columns(*chain.k());
    } else {
        x = block_columns(h_to_r(chain.h()));
    }
    return model_from_sections(model_sections(x, r, n, jet), r, n, z0);
}

ExactMatrix phi_hplus(const UnitonChain& chain, const GaussRat& z0) {
    const size_t r = chain.r(), n = chain.n();
    std::vector<ExactMatrix> t = polynomial_coefficients(evaluate_exact(chain, z0));
    ExactMatrix out(r * n, r * n);
    for (size_t m = 0; m < r; ++m)
        for (size_t j = 0; j < n; ++j)
            for (size_t b = m; b < r; ++b)
                for (size_t row = 0; row < n; ++row) out(b * n + row, m * n + j) = t[b - m](row, j);
    return column_basis(out);
}

ShiftReport shift_stability(const ModelSpace& w) {
    const size_t dim = w.blocks * w.ambient;
    std::vector<MeroVector> jets = w.sections;
    for (const auto& s : w.sections) jets.push_back(derivative(s));
    ExactMatrix w1 = evaluate_all(jets, dim, w.point);
    ShiftReport rep;
    rep.rank_w = w.basis.cols();
    rep.rank_union = exact_rank(hstack(w.basis, shifted(w1, w.blocks, w.ambient)));
    rep.stable = rep.rank_union == rep.rank_w;
    return rep;
}

std::string AdaptedClass::label() const {
    if (type_i && type_ii) return "both";
    if (type_i) return "i";
    if (type_ii) return "ii";
    return "neither";
}

bool AdaptedReport::all_adapted() const {
    for (const auto& v : vectors)
        if (!v.adapted()) return false;
    return true;
}

AdaptedReport f0_adapted_check(const std::vector<ExactVector>& vectors, size_t blocks, const ExactMatrix& f0_projector) {
    const size_t n = f0_projector.rows();
    const ExactMatrix perp = ExactMatrix::identity(n) - f0_projector;
    AdaptedReport rep;
    for (const auto& v : vectors) {
        if (v.size() != blocks * n) throw BadArguments("block vector has the wrong length");
        AdaptedClass c{true, true};
        for (size_t b = 0; b < blocks; ++b) {
            ExactVector part(v.begin() + b * n, v.begin() + (b + 1) * n);
            bool in_f0 = f0_projector * part == part, in_perp = perp * part == part;
            if (b % 2 == 0) {
                c.type_i = c.type_i && in_f0;
                c.type_ii = c.type_ii && in_perp;
            } else {
                c.type_i = c.type_i && in_perp;
                c.type_ii = c.type_ii && in_f0;
            }
        }
        rep.vectors.push_back(c);
    }
    return rep;
}

AdaptedReport f0_adapted_check(const std::vector<MeroVector>& sections, size_t blocks, const ExactMatrix& f0_projector) {
    const size_t n = f0_projector.rows();
    const ExactMatrix perp = ExactMatrix::identity(n) - f0_projector;
    AdaptedReport rep;
    for (const auto& v : sections) {
        if (v.size() != blocks * n) throw BadArguments("block section has the wrong length");
        AdaptedClass c{true, true};
        for (size_t b = 0; b < blocks; ++b) {
            MeroVector part(v.begin() + b * n, v.begin() + (b + 1) * n);
            bool in_f0 = mero_in_subspace(part, f0_projector), in_perp = mero_in_subspace(part, perp);
            c.type_i = c.type_i && (b % 2 == 0 ? in_f0 : in_perp);
            c.type_ii = c.type_ii && (b % 2 == 0 ? in_perp : in_f0);
        }
        rep.vectors.push_back(c);
    }
    return rep;
}

}  // namespace uniton
