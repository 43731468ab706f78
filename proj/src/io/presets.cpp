#include "uniton/io/presets.hpp"

#include <functional>
#include <map>

#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

// Polynomial from ascending integer coefficients.
Poly P(std::initializer_list<long> c) {
    std::vector<GaussRat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

// Entry of V: an integer constant or a polynomial.
struct E {
    Poly p;
    E(long c) : p(GaussRat(c)) {}  // NOLINT
    E(Poly q) : p(std::move(q)) {}  // NOLINT
};

MeroVector V(std::initializer_list<E> entries) {
    MeroVector out;
    for (const auto& e : entries) out.emplace_back(e.p);
    return out;
}

MeroGrid zero_grid(size_t r, size_t n) { return MeroGrid(r, std::vector<MeroVector>(n, zero_mero(n))); }

AdaptedPair pair_of(size_t n, size_t k, std::vector<std::vector<size_t>> lm, std::vector<std::vector<size_t>> sm) {
    return AdaptedPair::from_matrices(n, k, lm, sm);
}

Scenario base(const std::string& name, size_t n, size_t k, size_t r) {
    Scenario s;
    s.name = name;
    s.n = n;
    s.k = k;
    s.array = zero_grid(r, n);
    s.seed = 1;
    return s;
}

// U(3) example (b) in its Grassmannian form F0 = C^3: alpha_1 = span{H_01} rank 1, alpha_2 rank 2.
Scenario u3_example() {
    Scenario s = base("u3-example", 3, 3, 2);
    s.array[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1})});
    s.pair = pair_of(3, 3, {{1, 0}, {1, 0}}, {{0, 0}, {0, 0}});
    return s;
}

// n = 10, k = 5; columns 3 and 4 are ordered L-block before S-block.
Scenario c10_example() {
    Scenario s = base("c10-example", 10, 5, 3);
    auto& a = s.array;
    // column 1: L01, E11, L21
    a[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), 0, 0, 0, 0, 0, 0, 0});
    a[1][0] = V({0, 0, 0, 0, 0, 0, 0, P({1}), 0, P({0, 1})});
    a[2][0] = V({0, P({1}), 0, P({0, 1}), 0, 0, 0, 0, 0, 0});
    // column 2: E01 (E01'' = 0), L11, E21
    a[0][1] = V({0, 0, 0, 0, 0, P({1}), P({0, 1}), 0, 0, 0});
    a[1][1] = V({0, 0, 0, P({1}), P({0, 1}), 0, 0, 0, 0, 0});
    a[2][1] = V({0, 0, 0, 0, 0, 0, 0, P({0, 1}), P({1}), 0});
    // column 3: L12 constant, E22
    a[1][2] = V({0, 0, 0, 0, P({1}), 0, 0, 0, 0, 0});
    a[2][2] = V({0, 0, 0, 0, 0, 0, P({1}), 0, 0, P({1})});
    // column 4: E12, L22
    a[1][3] = V({0, 0, 0, 0, 0, 0, 0, P({1}), P({0, 1}), P({0, 0, 1})});
    a[2][3] = V({P({1}), 0, P({1}), 0, 0, 0, 0, 0, 0, 0});
    // column 5: L23
    a[2][4] = V({0, 0, 0, P({1}), 0, 0, 0, 0, 0, 0});
    s.pair = pair_of(10, 5, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    return s;
}

// dim F0 = 2, r = 3, two columns; n = 6 so that F_1, F_2, F_3 have ranks n-2, 2, n-3.
Scenario f0dim2_example() {
    Scenario s = base("f0dim2-example", 6, 2, 3);
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), 0, 0, 0, 0});
    a[1][0] = V({0, 0, P({0, 1}), P({1}), 0, 0});
    a[2][0] = V({P({0, 1}), P({1}), 0, 0, 0, 0});
    a[0][1] = V({0, 0, P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1})});
    a[1][1] = V({P({1}), P({0, 1}), 0, 0, 0, 0});
    a[2][1] = V({0, 0, 0, P({1}), P({0, 1}), P({1})});
    s.pair = pair_of(6, 2, {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    return s;
}

Scenario g2c5_case_a() {
    Scenario s = base("g2c5-case-a", 5, 5, 3);
    s.array[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), P({0, 0, 0, 0, 1})});
    s.pair = pair_of(5, 5, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    return s;
}

Scenario g2c5_case_b() {
    Scenario s = base("g2c5-case-b", 5, 4, 3);
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), 0});
    a[2][0] = V({P({0, 1}), 0, P({1}), 0, 0});
    a[0][1] = V({0, 0, 0, 0, P({1})});
    // L11 constant: C^2_2 L11' would otherwise enlarge alpha_3 beyond the pair's count.
    a[1][1] = V({0, P({1}), 0, P({1}), 0});
    s.pair = pair_of(5, 4, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    return s;
}

Scenario g2c5_case_c() {
    Scenario s = base("g2c5-case-c", 5, 0, 3);
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), P({0, 0, 0, 0, 1})});
    a[2][0] = V({P({0, 1}), 0, P({1}), 0, P({1})});
    a[2][1] = V({0, P({1}), P({0, 1}), P({1}), 0});
    s.pair = pair_of(5, 0, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 1}});
    return s;
}

// l_0^j = s_0^j for every j keeps phi_1, phi_2, phi_3 in G_4(C^8).
Scenario g4c8_stay() {
    Scenario s = base("g4c8-stay", 8, 4, 3);
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), 0, 0, 0, 0});
    a[0][1] = V({0, 0, 0, 0, P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1})});
    s.pair = pair_of(8, 4, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    return s;
}

// k = 4 with maximal uniton number 3. The stated pair lands in G_5 for Q = +1, so Q = -1 gives G_3(C^8).
Scenario g3c8_max() {
    Scenario s = base("g3c8-max", 8, 4, 3);
    s.q_sign = -1;
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), 0, 0, 0, 0});
    a[1][0] = V({0, 0, 0, 0, P({0, 1}), 0, P({1}), 0});
    a[2][0] = V({0, P({1}), 0, P({0, 1}), 0, 0, 0, 0});
    a[0][1] = V({0, 0, 0, 0, P({1}), P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1})});
    a[1][1] = V({P({0, 1}), 0, P({1}), 0, 0, 0, 0, 0});
    a[2][1] = V({0, 0, 0, 0, 0, P({1}), 0, P({0, 1})});
    a[2][2] = V({P({1}), P({1}), P({0, 1}), 0, 0, 0, 0, 0});
    s.pair = pair_of(8, 4, {{1, 0, 0}, {1, 0, 0}, {1, 0, 1}}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    return s;
}

// Raw data: row 0 lies in F0 = span{e1, e2, e3}, row 1 mixes F0 and F0-perp components.
Scenario broken_pattern() {
    Scenario s = base("broken-pattern", 4, 3, 2);
    s.kind = ArrayKind::H;
    auto& a = s.array;
    a[0][0] = V({P({1}), P({0, 1}), 0, 0});
    a[1][0] = V({0, 0, P({1}), P({0, 1})});
    return s;
}

const std::map<std::string, std::function<Scenario()>>& table() {
    static const std::map<std::string, std::function<Scenario()>> t = {
        {"u3-example", u3_example},       {"c10-example", c10_example}, {"f0dim2-example", f0dim2_example},
        {"g2c5-case-a", g2c5_case_a},     {"g2c5-case-b", g2c5_case_b}, {"g2c5-case-c", g2c5_case_c},
        {"g4c8-stay", g4c8_stay},         {"g3c8-max", g3c8_max},       {"broken-pattern", broken_pattern},
    };
    return t;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"u3-example",  "c10-example", "f0dim2-example", "g2c5-case-a",   "g2c5-case-b",
            "g2c5-case-c", "g4c8-stay",   "g3c8-max",       "broken-pattern"};
}

Scenario preset(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw BadArguments("unknown preset '" + name + "'");
    return it->second();
}

bool preset_is_valid_example(const std::string& name) { return name != "broken-pattern"; }

}  // namespace uniton
