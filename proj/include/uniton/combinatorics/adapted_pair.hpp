#pragma once

#include <string>
#include <vector>

namespace uniton {

/// Pair of lower-triangular rank tables: l[i][t] = l_i^t for t < r - i (same for s).
struct AdaptedPair {
    size_t n = 0;
    size_t k = 0;
    size_t r = 0;
    std::vector<std::vector<size_t>> l;
    std::vector<std::vector<size_t>> s;

    size_t l_at(size_t i, size_t t) const { return i < r && t + i < r ? l[i][t] : 0; }
    size_t s_at(size_t i, size_t t) const { return i < r && t + i < r ? s[i][t] : 0; }
    size_t total_l() const;
    size_t total_s() const;
    /// Largest leading block rank max_i max(l_i^0, s_i^0).
    size_t max_block_rank() const;
    /// True when row r-1 (entries with i + t = r - 1) has a nonzero entry.
    bool last_row_nonzero() const;

    /// Matrix form: entry [row][col] = l_col^{row-col} for col <= row.
    std::vector<std::vector<size_t>> l_matrix() const;
    std::vector<std::vector<size_t>> s_matrix() const;
    static AdaptedPair from_matrices(size_t n, size_t k, const std::vector<std::vector<size_t>>& lm,
                                     const std::vector<std::vector<size_t>>& sm);

    /// Interchanges L and S and replaces k by n - k.
    AdaptedPair swapped() const;

    friend bool operator==(const AdaptedPair& a, const AdaptedPair& b) {
        return a.n == b.n && a.k == b.k && a.r == b.r && a.l == b.l && a.s == b.s;
    }
    friend bool operator!=(const AdaptedPair& a, const AdaptedPair& b) { return !(a == b); }
    std::string str() const;
};

/// Throws BadArguments unless columns are non-increasing and the size bounds hold.
void validate_pair(const AdaptedPair& p);
bool is_adapted(const AdaptedPair& p);

/// Column blocks of row i: L-block [a[i], b[i]), S-block [b[i], a[i+1]); zero-based.
struct BlockIndex {
    std::vector<size_t> a;  // size r + 1
    std::vector<size_t> b;  // size r
};
BlockIndex block_index(const AdaptedPair& p);

/// Predicted rank of F_i for Q_sign = +1.
long rank_formula(const AdaptedPair& p, size_t i);

/// Upper bound on the uniton number for data with dim F0 = k into G_p(C^n); requires 2p <= n.
long uniton_bound(long k, long p, long n);

struct BoundCase {
    std::string label;  // "(i)", "(ii)" or "(iii)"
    long a = 0;
    long r = 0;
};
/// Which estimate applies, with a_k and the bound; requires 2p <= n.
BoundCase bound_case(long k, long p, long n);

}  // namespace uniton
