#include "uniton/io/json_io.hpp"

#include "uniton/numeric/errors.hpp"

namespace uniton {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

size_t size_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<size_t>();
}

const json& array_of(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be a list");
    return j;
}

Poly poly_from_json(const json& j) {
    std::vector<GaussRat> c;
    for (const auto& x : array_of(j, "coefficient list")) c.push_back(gauss_from_json(x));
    return Poly(std::move(c));
}

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

std::vector<std::vector<size_t>> table_from_json(const json& j, size_t r, const char* name) {
    std::vector<std::vector<size_t>> t;
    for (const auto& col : array_of(j, name)) {
        std::vector<size_t> c;
        for (const auto& x : array_of(col, name)) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw ParseError(std::string(name) + " entries must be nonnegative integers");
            c.push_back(x.get<size_t>());
        }
        t.push_back(std::move(c));
    }
    if (t.size() != r) throw ParseError(std::string(name) + " and the other table differ in size");
    for (size_t i = 0; i < r; ++i)
        if (t[i].size() != r - i) throw ParseError(std::string(name) + " column " + std::to_string(i) + " must have " +
                                                   std::to_string(r - i) + " entries");
    return t;
}

}  // namespace

json gauss_to_json(const GaussRat& z) { return z.str(); }

GaussRat gauss_from_json(const json& j) {
    if (j.is_string()) return GaussRat::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussRat(j.get<long>());
    throw ParseError("Gaussian rational must be a string such as \"3/2-i\"");
}

json ratfun_to_json(const RatFun& f) {
    json out = {{"num", poly_to_json(f.num())}};
    if (!f.is_polynomial())
        out["den"] = poly_to_json(f.den());
    return out;
}

RatFun ratfun_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return RatFun(gauss_from_json(j));
    Poly num = poly_from_json(field(j, "num"));
    if (!j.contains("den")) return RatFun(num);
    Poly den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw ParseError("zero denominator");
    return RatFun(num, den);
}

json mero_to_json(const MeroVector& v) {
    json out = json::array();
    for (const auto& f : v) out.push_back(ratfun_to_json(f));
    return out;
}

MeroVector mero_from_json(const json& j) {
    MeroVector v;
    for (const auto& x : array_of(j, "vector")) v.push_back(ratfun_from_json(x));
    return v;
}

json exact_vector_to_json(const ExactVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ExactVector exact_vector_from_json(const json& j) {
    ExactVector v;
    for (const auto& x : array_of(j, "vector")) v.push_back(gauss_from_json(x));
    return v;
}

json columns_to_json(const ExactMatrix& m) {
    json out = json::array();
    for (size_t c = 0; c < m.cols(); ++c) out.push_back(exact_vector_to_json(m.column(c)));
    return out;
}

ExactMatrix columns_from_json(const json& j, size_t rows) {
    std::vector<ExactVector> cols;
    for (const auto& c : array_of(j, "column list")) {
        cols.push_back(exact_vector_from_json(c));
        if (cols.back().size() != rows) throw ParseError("column of wrong length");
    }
    return ExactMatrix::from_columns(rows, cols);
}

json pair_to_json(const AdaptedPair& p) {
    return {{"n", p.n}, {"k", p.k}, {"L", p.l}, {"S", p.s}};
}

AdaptedPair pair_from_json(const json& j) {
    AdaptedPair p;
    p.n = size_field(j, "n");
    p.k = size_field(j, "k");
    p.r = array_of(field(j, "L"), "L").size();
    p.l = table_from_json(j.at("L"), p.r, "L");
    p.s = table_from_json(field(j, "S"), p.r, "S");
    try {
        validate_pair(p);
    } catch (const BadArguments& e) {
        throw ParseError(std::string("pair: ") + e.what());
    }
    return p;
}

json scenario_to_json(const Scenario& s) {
    json out;
    if (!s.name.empty()) out["name"] = s.name;
    out["n"] = s.n;
    out["k"] = s.k;
    out["Q_sign"] = s.q_sign;
    out["kind"] = s.kind == ArrayKind::K ? "K" : "H";
    if (s.f0_basis) out["F0_basis"] = columns_to_json(*s.f0_basis);
    json rows = json::array();
    for (const auto& row : s.array) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(mero_to_json(v));
        rows.push_back(jr);
    }
    out["array"] = rows;
    if (s.pair) out["pair"] = pair_to_json(*s.pair);
    out["seed"] = s.seed;
    if (!s.points.empty()) out["points"] = exact_vector_to_json(s.points);
    return out;
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    Scenario s;
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    s.n = size_field(j, "n");
    s.k = size_field(j, "k");
    if (j.contains("Q_sign")) {
        const json& q = j.at("Q_sign");
        if (!q.is_number_integer() || (q.get<int>() != 1 && q.get<int>() != -1))
            throw ParseError("Q_sign must be 1 or -1");
        s.q_sign = q.get<int>();
    }
    if (j.contains("kind")) {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "K")
            s.kind = ArrayKind::K;
        else if (kind == "H")
            s.kind = ArrayKind::H;
        else
            throw ParseError("kind must be \"K\" or \"H\"");
    }
    if (j.contains("F0_basis")) s.f0_basis = columns_from_json(j.at("F0_basis"), s.n);
    for (const auto& row : array_of(field(j, "array"), "array")) {
        std::vector<MeroVector> r;
        for (const auto& v : array_of(row, "array row")) r.push_back(mero_from_json(v));
        s.array.push_back(std::move(r));
    }
    if (j.contains("pair")) s.pair = pair_from_json(j.at("pair"));
    if (j.contains("seed")) s.seed = size_field(j, "seed");
    if (j.contains("points")) s.points = exact_vector_from_json(j.at("points"));
    return s;
}

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json report_to_json(const CheckReport& r) {
    json out = {{"check", r.check},
                {"backend", r.backend},
                {"applicable", r.applicable},
                {"points", r.points},
                {"residuals", r.residuals},
                {"pass", r.pass}};
    if (!r.residuals_half.empty()) {
        out["residuals_half"] = r.residuals_half;
        out["contraction"] = r.contraction;
    }
    if (!r.details.empty()) out["details"] = r.details;
    return out;
}

json model_to_json(const ModelSpace& w) {
    json basis = json::array();
    for (size_t c = 0; c < w.basis.cols(); ++c) {
        ExactVector v = w.basis.column(c);
        json blocks = json::array();
        for (size_t b = 0; b < w.blocks; ++b)
            blocks.push_back(exact_vector_to_json(ExactVector(v.begin() + b * w.ambient, v.begin() + (b + 1) * w.ambient)));
        basis.push_back(blocks);
    }
    return {{"point", w.point.str()}, {"blocks", w.blocks}, {"ambient", w.ambient}, {"dim", w.dim()}, {"basis", basis}};
}

}  // namespace uniton
