#include "uniton/combinatorics/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

using Table = std::vector<std::vector<size_t>>;

// All column tables of order r (column i has r - i non-increasing entries) with total <= budget.
std::vector<Table> tables_up_to(size_t r, size_t budget) {
    std::vector<Table> out;
    Table cur(r);
    std::function<void(size_t, size_t, size_t, size_t)> rec = [&](size_t col, size_t pos, size_t left, size_t cap) {
        if (col == r) {
            out.push_back(cur);
            return;
        }
        if (pos == r - col) {
            rec(col + 1, 0, left, budget);
            return;
        }
        for (size_t v = 0; v <= std::min(cap, left); ++v) {
            cur[col].push_back(v);
            rec(col, pos + 1, left - v, v);
            cur[col].pop_back();
        }
    };
    rec(0, 0, budget, budget);
    return out;
}

size_t total(const Table& t) {
    size_t s = 0;
    for (const auto& c : t)
        for (size_t x : c) s += x;
    return s;
}

std::vector<size_t> flat_key(const AdaptedPair& p) {
    std::vector<size_t> key;
    for (const auto& m : {p.l_matrix(), p.s_matrix()})
        for (const auto& row : m) key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace

long uniton_bound_any(long k, long p, long n) {
    if (2 * p <= n) return uniton_bound(k, p, n);
    return uniton_bound(n - k, n - p, n);
}

std::vector<AdaptedPair> static_candidates(size_t n, size_t p, size_t r, size_t k) {
    if (n < 2 || r < 1 || r > n - 1 || p > n || k > n) throw BadArguments("need 1 <= r <= n-1, p <= n, k <= n");
    std::vector<Table> ls = tables_up_to(r, std::min(k, n - 1));
    std::vector<Table> ss = tables_up_to(r, std::min(n - k, n - 1));
    std::vector<AdaptedPair> out;
    AdaptedPair cand;
    cand.n = n;
    cand.k = k;
    cand.r = r;
    for (const auto& l : ls) {
        if (k >= 1 && l[0][0] == 0) continue;
        size_t tl = total(l);
        for (const auto& s : ss) {
            if (k + 1 <= n && s[0][0] == 0) continue;
            if (tl + total(s) + 1 > n) continue;
            cand.l = l;
            cand.s = s;
            if (!cand.last_row_nonzero()) continue;
            if (rank_formula(cand, r) != static_cast<long>(p)) continue;
            bool in_range = true;
            for (size_t i = 0; i < r && in_range; ++i) {
                long v = rank_formula(cand, i);
                in_range = v >= 0 && v <= static_cast<long>(n);
            }
            if (in_range) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AdaptedPair& a, const AdaptedPair& b) { return flat_key(a) < flat_key(b); });
    return out;
}

int realizability_degree(const AdaptedPair& pair) {
    long d = static_cast<long>(pair.r + pair.max_block_rank());
    auto ceil_div = [](size_t a, size_t b) { return static_cast<long>((a + b - 1) / b); };
    if (pair.l[0][0] > 0) d = std::max(d, ceil_div(pair.k, pair.l[0][0]) - 1);
    if (pair.s[0][0] > 0) d = std::max(d, ceil_div(pair.n - pair.k, pair.s[0][0]) - 1);
    return static_cast<int>(d);
}

std::optional<F0Array> realize_pair(const AdaptedPair& pair, std::uint64_t seed, size_t attempts, size_t points) {
    const int degree = realizability_degree(pair);
    for (size_t a = 0; a < attempts; ++a) {
        std::uint64_t s = seed * 1000003ULL + a * 7919ULL;
        F0Array arr = random_matching_array(pair, s, degree);
        if (!alpha1_full(arr)) continue;
        MatchingOptions mo;
        mo.seed = s;
        mo.points = points;
        mo.early_exit = true;
        if (matching_check(arr, pair, mo).ok) return arr;
    }
    return std::nullopt;
}

std::vector<EnumeratedPair> enumerate_pairs(size_t n, size_t p, size_t r, const EnumerateOptions& opt) {
    if (n < 2 || r < 1 || r > n - 1 || p > n) throw BadArguments("need n >= 2, 1 <= r <= n-1 and p <= n");
    if (opt.only_k && *opt.only_k > n) throw BadArguments("k exceeds n");
    std::vector<EnumeratedPair> out;
    for (size_t kk = n + 1; kk-- > 0;) {
        if (opt.only_k && *opt.only_k != kk) continue;
        if (opt.apply_bound &&
            static_cast<long>(r) > uniton_bound_any(static_cast<long>(kk), static_cast<long>(p), static_cast<long>(n)))
            continue;
        for (auto& cand : static_candidates(n, p, r, kk)) {
            if (!opt.realizability) {
                out.push_back({std::move(cand), std::nullopt});
                continue;
            }
            auto w = realize_pair(cand, opt.seed + kk, opt.attempts, opt.points);
            if (w) out.push_back({std::move(cand), std::move(w)});
        }
    }
    return out;
}

}  // namespace uniton
