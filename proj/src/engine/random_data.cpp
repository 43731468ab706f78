#include "uniton/engine/random_data.hpp"

#include "uniton/numeric/errors.hpp"

namespace uniton {

GaussRat random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 2);
    return GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

MeroVector random_poly_vector(std::mt19937_64& rng, const ExactMatrix& basis, int degree) {
    const size_t n = basis.rows();
    std::vector<std::vector<GaussRat>> coeffs(n, std::vector<GaussRat>(static_cast<size_t>(degree) + 1));
    for (int d = 0; d <= degree; ++d) {
        std::vector<GaussRat> a(basis.cols());
        for (auto& x : a) x = random_coefficient(rng);
        std::vector<GaussRat> v = basis * a;
        for (size_t c = 0; c < n; ++c) coeffs[c][static_cast<size_t>(d)] = v[c];
    }
    MeroVector out;
    for (auto& c : coeffs) out.emplace_back(Poly(std::move(c)));
    return out;
}

Subspace random_subspace(std::mt19937_64& rng, size_t n, size_t k) {
    std::uniform_int_distribution<long> d(-2, 2);
    for (;;) {
        ExactMatrix b(n, k);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < k; ++j) b(i, j) = GaussRat(mpq_class(d(rng)), mpq_class(d(rng) / 2));
        if (exact_rank(b) == k) return Subspace::from_basis(n, b);
    }
}

F0Array random_f0_array(std::uint64_t seed, const RandomArrayOptions& o) {
    if (o.k > o.n || o.r == 0 || o.active_columns > o.n) throw BadArguments("random array shape");
    std::mt19937_64 rng(seed);
    Subspace f0 = o.random_f0_basis && o.k > 0 && o.k < o.n ? random_subspace(rng, o.n, o.k)
                                                           : Subspace::standard(o.n, o.k);
    MeroGrid grid(o.r, std::vector<MeroVector>(o.n, zero_mero(o.n)));
    std::uniform_int_distribution<size_t> start_row(0, o.r - 1);
    std::bernoulli_distribution coin(0.5), skip(o.sparsity);
    for (size_t j = 0; j < o.active_columns; ++j) {
        bool even_in_f0 = coin(rng);
        size_t start = start_row(rng);
        for (size_t row = start; row < o.r; ++row) {
            if (row > start && skip(rng)) continue;
            bool in_f0 = (row % 2 == 0) == even_in_f0;
            const ExactMatrix& basis = in_f0 ? f0.basis : f0.complement;
            if (basis.cols() == 0) continue;
            grid[row][j] = random_poly_vector(rng, basis, o.degree);
        }
    }
    return make_f0_array(f0, std::move(grid));
}

}  // namespace uniton
