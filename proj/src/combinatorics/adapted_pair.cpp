#include "uniton/combinatorics/adapted_pair.hpp"

#include <algorithm>
#include <sstream>

#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

size_t table_total(const std::vector<std::vector<size_t>>& t) {
    size_t s = 0;
    for (const auto& c : t)
        for (size_t x : c) s += x;
    return s;
}

std::vector<std::vector<size_t>> to_matrix(const std::vector<std::vector<size_t>>& cols, size_t r) {
    std::vector<std::vector<size_t>> m(r, std::vector<size_t>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t + i < r; ++t) m[i + t][i] = cols[i][t];
    return m;
}

std::vector<std::vector<size_t>> from_matrix(const std::vector<std::vector<size_t>>& m, size_t r) {
    if (m.size() != r) throw BadArguments("pair matrices must be r x r");
    std::vector<std::vector<size_t>> cols(r);
    for (size_t row = 0; row < r; ++row) {
        if (m[row].size() != r) throw BadArguments("pair matrices must be r x r");
        for (size_t c = row + 1; c < r; ++c)
            if (m[row][c] != 0) throw BadArguments("pair matrices must be lower triangular");
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t + i < r; ++t) cols[i].push_back(m[i + t][i]);
    return cols;
}

}  // namespace

size_t AdaptedPair::total_l() const { return table_total(l); }
size_t AdaptedPair::total_s() const { return table_total(s); }

size_t AdaptedPair::max_block_rank() const {
    size_t m = 0;
    for (size_t i = 0; i < r; ++i) m = std::max({m, l[i][0], s[i][0]});
    return m;
}

bool AdaptedPair::last_row_nonzero() const {
    for (size_t i = 0; i < r; ++i)
        if (l_at(i, r - 1 - i) || s_at(i, r - 1 - i)) return true;
    return false;
}

std::vector<std::vector<size_t>> AdaptedPair::l_matrix() const { return to_matrix(l, r); }
std::vector<std::vector<size_t>> AdaptedPair::s_matrix() const { return to_matrix(s, r); }

AdaptedPair AdaptedPair::from_matrices(size_t n, size_t k, const std::vector<std::vector<size_t>>& lm,
                                       const std::vector<std::vector<size_t>>& sm) {
    AdaptedPair p;
    p.n = n;
    p.k = k;
    p.r = lm.size();
    p.l = from_matrix(lm, p.r);
    p.s = from_matrix(sm, p.r);
    return p;
}

AdaptedPair AdaptedPair::swapped() const {
    AdaptedPair p = *this;
    p.k = n - k;
    std::swap(p.l, p.s);
    return p;
}

std::string AdaptedPair::str() const {
    std::ostringstream os;
    auto dump = [&](const std::vector<std::vector<size_t>>& m) {
        os << "[";
        for (size_t i = 0; i < m.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
            os << "]";
        }
        os << "]";
    };
    os << "k=" << k << " L=";
    dump(l_matrix());
    os << " S=";
    dump(s_matrix());
    return os.str();
}

void validate_pair(const AdaptedPair& p) {
    if (p.r == 0) throw BadArguments("pair order r must be positive");
    if (p.k > p.n) throw BadArguments("k exceeds n");
    if (p.l.size() != p.r || p.s.size() != p.r) throw BadArguments("pair needs r columns");
    for (size_t i = 0; i < p.r; ++i) {
        if (p.l[i].size() != p.r - i || p.s[i].size() != p.r - i)
            throw BadArguments("column " + std::to_string(i) + " must have r - i entries");
        for (size_t t = 1; t < p.r - i; ++t)
            if (p.l[i][t] > p.l[i][t - 1] || p.s[i][t] > p.s[i][t - 1])
                throw BadArguments("column " + std::to_string(i) + " is not non-increasing");
    }
    if (p.total_l() > p.k) throw BadArguments("sum of L exceeds k");
    if (p.total_s() > p.n - p.k) throw BadArguments("sum of S exceeds n - k");
    if (p.total_l() + p.total_s() + 1 > p.n) throw BadArguments("sum of L and S exceeds n - 1");
}

bool is_adapted(const AdaptedPair& p) {
    try {
        validate_pair(p);
        return true;
    } catch (const BadArguments&) {
        return false;
    }
}

BlockIndex block_index(const AdaptedPair& p) {
    BlockIndex b;
    b.a.push_back(0);
    for (size_t i = 0; i < p.r; ++i) {
        b.b.push_back(b.a[i] + p.l[i][0]);
        b.a.push_back(b.b[i] + p.s[i][0]);
    }
    return b;
}

long rank_formula(const AdaptedPair& p, size_t i) {
    if (i > p.r) throw OutOfRange("rank_formula index beyond r");
    auto diag = [&](size_t d) {
        long sum = 0;
        for (size_t t = 0; t <= d; ++t)
            sum += static_cast<long>(p.s_at(t, d - t)) - static_cast<long>(p.l_at(t, d - t));
        return sum;
    };
    long k = static_cast<long>(p.k), n = static_cast<long>(p.n);
    if (i % 2 == 0) {
        long acc = k;
        for (size_t j = 0; 2 * j + 2 <= i; ++j) acc += diag(2 * j + 1);
        return acc;
    }
    long acc = k;
    for (size_t j = 0; 2 * j <= i - 1; ++j) acc += diag(2 * j);
    return n - acc;
}

long uniton_bound(long k, long p, long n) {
    if (p < 0 || n < 1 || 2 * p > n) throw BadArguments("uniton_bound requires 0 <= 2p <= n");
    if (k < 0 || k > n) throw BadArguments("uniton_bound requires 0 <= k <= n");
    if (p == 0) return 0;
    long a = ((k % 2 == 0 && k < p) || ((n - k) % 2 == 0 && k >= p)) ? 1 : 0;
    if (k < p) return std::min(2 * p - k - a, n - 1);
    if (k + p <= n) return k == p ? p - 1 : p;
    return 2 * p - (n - k) - a;
}

BoundCase bound_case(long k, long p, long n) {
    BoundCase c;
    c.r = uniton_bound(k, p, n);
    c.label = k < p ? "(i)" : (k + p <= n ? "(ii)" : "(iii)");
    c.a = (k < p ? k : n - k) % 2 == 0 ? 1 : 0;
    return c;
}

}  // namespace uniton
