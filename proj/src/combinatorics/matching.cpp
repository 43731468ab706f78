#include "uniton/combinatorics/matching.hpp"

#include <algorithm>
#include <random>

#include "uniton/engine/evaluation.hpp"
#include "uniton/engine/random_data.hpp"
#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

struct BlockRanks {
    // [i][j]: rank of C^i_i K^{(i-j)}_{j, block} for the L and S blocks of row j.
    std::vector<std::vector<size_t>> l, s;
    std::vector<size_t> l_combined, s_combined;
};

// Derivatives K^{(t)}_{row, col} for t + row <= r - 1.
std::vector<std::vector<std::vector<MeroVector>>> k_derivatives(const MeroGrid& k) {
    const size_t r = k.size();
    std::vector<std::vector<std::vector<MeroVector>>> out(r);
    for (size_t t = 0; t < r; ++t) {
        out[t].resize(r - t);
        for (size_t row = 0; row + t < r; ++row)
            for (size_t c = 0; c < k[row].size(); ++c)
                out[t][row].push_back(t == 0 ? k[row][c] : derivative(out[t - 1][row][c]));
    }
    return out;
}

class RankProbe {
public:
    RankProbe(const F0Array& array, std::vector<size_t> l0, std::vector<size_t> s0)
        : array_(array), chain_(UnitonChain::from_array(array, 1)), kd_(k_derivatives(array.entries)) {
        blocks_.a.push_back(0);
        for (size_t i = 0; i < array.r(); ++i) {
            blocks_.b.push_back(blocks_.a[i] + l0[i]);
            blocks_.a.push_back(blocks_.b[i] + s0[i]);
        }
    }

    const BlockIndex& blocks() const { return blocks_; }

    BlockRanks at(const GaussRat& z) const {
        EvalOptions eo;
        eo.check_generic_ranks = false;
        ChainPoint<GaussRat> cp = evaluate_exact(chain_, z, eo);
        const size_t r = array_.r(), n = array_.n();
        BlockRanks br;
        br.l.assign(r, std::vector<size_t>(r, 0));
        br.s.assign(r, std::vector<size_t>(r, 0));
        for (size_t i = 0; i < r; ++i) {
            const ExactMatrix& cii = cp.C[i][i];
            ExactMatrix all_l(n, 0), all_s(n, 0);
            for (size_t j = 0; j <= i; ++j) {
                auto block = [&](size_t lo, size_t hi) {
                    std::vector<ExactVector> cols;
                    for (size_t c = lo; c < hi; ++c) cols.push_back(cii * evaluate(kd_[i - j][j][c], z));
                    return ExactMatrix::from_columns(n, cols);
                };
                ExactMatrix lb = block(blocks_.a[j], blocks_.b[j]);
                ExactMatrix sb = block(blocks_.b[j], blocks_.a[j + 1]);
                br.l[i][j] = exact_rank(lb);
                br.s[i][j] = exact_rank(sb);
                all_l = hstack(all_l, lb);
                all_s = hstack(all_s, sb);
            }
            br.l_combined.push_back(exact_rank(all_l));
            br.s_combined.push_back(exact_rank(all_s));
        }
        return br;
    }

private:
    const F0Array& array_;
    UnitonChain chain_;
    std::vector<std::vector<std::vector<MeroVector>>> kd_;
    BlockIndex blocks_;
};

void take_max(BlockRanks& acc, const BlockRanks& x) {
    for (size_t i = 0; i < acc.l.size(); ++i) {
        for (size_t j = 0; j < acc.l.size(); ++j) {
            acc.l[i][j] = std::max(acc.l[i][j], x.l[i][j]);
            acc.s[i][j] = std::max(acc.s[i][j], x.s[i][j]);
        }
        acc.l_combined[i] = std::max(acc.l_combined[i], x.l_combined[i]);
        acc.s_combined[i] = std::max(acc.s_combined[i], x.s_combined[i]);
    }
}

// Visits pole-free random points until opt.points were seen or visit returns false.
template <class Visit>
std::vector<GaussRat> scan_points(const MatchingOptions& opt, Visit visit) {
    std::mt19937_64 rng(opt.seed);
    std::vector<GaussRat> pts;
    for (size_t attempts = 0; pts.size() < opt.points && attempts < 50 * opt.points; ++attempts) {
        GaussRat z = random_sample_point(rng, opt.max_magnitude);
        try {
            bool more = visit(z);
            pts.push_back(z);
            if (!more) break;
        } catch (const PoleAtPoint&) {
        }
    }
    return pts;
}

void check_shapes(const F0Array& array, const AdaptedPair& pair) {
    validate_pair(pair);
    if (pair.n != array.n() || pair.k != array.k() || pair.r != array.r())
        throw BadArguments("pair and array disagree on n, k or r");
}

}  // namespace

MatchingReport matching_check(const F0Array& array, const AdaptedPair& pair, const MatchingOptions& opt) {
    check_shapes(array, pair);
    const size_t r = pair.r, n = pair.n;
    MatchingReport rep;
    BlockIndex bi = block_index(pair);
    const ExactMatrix perp = ExactMatrix::identity(n) - array.f0.projector;
    auto fail = [&](const std::string& clause, size_t row, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({clause, row, detail});
    };

    // Clause (i): block membership, zero entries above each block, nothing beyond the last block.
    for (size_t i = 0; i < r; ++i) {
        for (size_t c = bi.a[i]; c < bi.a[i + 1]; ++c) {
            bool l_block = c < bi.b[i];
            const MeroVector& v = array.entries[i][c];
            if (!mero_in_subspace(v, l_block ? array.f0.projector : perp))
                fail("i", i, "column " + std::to_string(c + 1) + " is not " + (l_block ? "F0" : "F0-perp") + "-valued");
            for (size_t above = 0; above < i; ++above)
                if (!is_zero(array.entries[above][c]))
                    fail("i", i, "column " + std::to_string(c + 1) + " is nonzero above its block row");
        }
    }
    for (size_t c = bi.a[r]; c < n; ++c)
        for (size_t row = 0; row < r; ++row)
            if (!is_zero(array.entries[row][c]))
                fail("i", row, "column " + std::to_string(c + 1) + " lies outside every block");
    if (!rep.ok && opt.early_exit) return rep;

    std::vector<size_t> l0, s0;
    for (size_t i = 0; i < r; ++i) {
        l0.push_back(pair.l[i][0]);
        s0.push_back(pair.s[i][0]);
    }
    RankProbe probe(array, l0, s0);
    BlockRanks generic;
    generic.l.assign(r, std::vector<size_t>(r, 0));
    generic.s = generic.l;
    generic.l_combined.assign(r, 0);
    generic.s_combined.assign(r, 0);

    auto exceeds = [&](const BlockRanks& b) {
        for (size_t i = 0; i < r; ++i) {
            size_t lsum = 0, ssum = 0;
            for (size_t j = 0; j <= i; ++j) {
                if (b.l[i][j] > pair.l_at(j, i - j) || b.s[i][j] > pair.s_at(j, i - j)) return true;
                lsum += pair.l_at(j, i - j);
                ssum += pair.s_at(j, i - j);
            }
            if (b.l_combined[i] > lsum || b.s_combined[i] > ssum) return true;
        }
        return false;
    };
    rep.points = scan_points(opt, [&](const GaussRat& z) {
        BlockRanks b = probe.at(z);
        take_max(generic, b);
        return !(opt.early_exit && exceeds(b));
    });

    for (size_t i = 0; i < r; ++i) {
        size_t lsum = 0, ssum = 0;
        for (size_t j = 0; j <= i; ++j) {
            size_t el = pair.l_at(j, i - j), es = pair.s_at(j, i - j);
            lsum += el;
            ssum += es;
            if (generic.l[i][j] != el)
                fail("ii", i, "L-block of row " + std::to_string(j) + ": rank " + std::to_string(generic.l[i][j]) +
                                  ", expected " + std::to_string(el));
            if (generic.s[i][j] != es)
                fail("ii", i, "S-block of row " + std::to_string(j) + ": rank " + std::to_string(generic.s[i][j]) +
                                  ", expected " + std::to_string(es));
        }
        if (generic.l_combined[i] != lsum)
            fail("iii", i, "combined L rank " + std::to_string(generic.l_combined[i]) + ", expected " +
                               std::to_string(lsum));
        if (generic.s_combined[i] != ssum)
            fail("iii", i, "combined S rank " + std::to_string(generic.s_combined[i]) + ", expected " +
                               std::to_string(ssum));
    }
    return rep;
}

AdaptedPair measure_pair(const F0Array& array, const std::vector<size_t>& l0, const std::vector<size_t>& s0,
                         const MatchingOptions& opt) {
    const size_t r = array.r();
    if (l0.size() != r || s0.size() != r) throw BadArguments("need one leading block size per row");
    RankProbe probe(array, l0, s0);
    BlockRanks generic;
    generic.l.assign(r, std::vector<size_t>(r, 0));
    generic.s = generic.l;
    generic.l_combined.assign(r, 0);
    generic.s_combined.assign(r, 0);
    scan_points(opt, [&](const GaussRat& z) {
        take_max(generic, probe.at(z));
        return true;
    });
    AdaptedPair p;
    p.n = array.n();
    p.k = array.k();
    p.r = r;
    p.l.resize(r);
    p.s.resize(r);
    for (size_t j = 0; j < r; ++j)
        for (size_t t = 0; t + j < r; ++t) {
            p.l[j].push_back(generic.l[j + t][j]);
            p.s[j].push_back(generic.s[j + t][j]);
        }
    return p;
}

F0Array random_matching_array(const AdaptedPair& pair, std::uint64_t seed, int degree) {
    return random_matching_array(pair, Subspace::standard(pair.n, pair.k), seed, degree);
}

F0Array random_matching_array(const AdaptedPair& pair, const Subspace& f0, std::uint64_t seed, int degree) {
    validate_pair(pair);
    if (f0.n != pair.n || f0.dim() != pair.k) throw BadArguments("F0 does not match the pair");
    if (degree < static_cast<int>(pair.r + pair.max_block_rank()))
        throw InfeasiblePair("degree " + std::to_string(degree) + " is below r + max block rank = " +
                             std::to_string(pair.r + pair.max_block_rank()));
    std::mt19937_64 rng(seed);
    BlockIndex bi = block_index(pair);
    MeroGrid grid(pair.r, std::vector<MeroVector>(pair.n, zero_mero(pair.n)));
    for (size_t i = 0; i < pair.r; ++i)
        for (size_t c = bi.a[i]; c < bi.a[i + 1]; ++c)
            grid[i][c] = random_poly_vector(rng, c < bi.b[i] ? f0.basis : f0.complement, degree);
    return make_f0_array(f0, std::move(grid));
}

bool alpha1_full(const F0Array& array) {
    std::vector<ExactVector> cols;
    for (const auto& v : array.entries[0]) {
        if (is_zero(v)) continue;
        for (auto& c : coefficient_vectors(v)) cols.push_back(std::move(c));
    }
    if (cols.empty()) return array.n() == 0;
    return exact_rank(ExactMatrix::from_columns(array.n(), cols)) == array.n();
}

}  // namespace uniton
