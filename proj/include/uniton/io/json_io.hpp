#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uniton/combinatorics/enumerate.hpp"
#include "uniton/io/scenario.hpp"
#include "uniton/loop/model_space.hpp"
#include "uniton/verify/report.hpp"

namespace uniton {

using nlohmann::json;

// Parsing throws ParseError with a path-like hint on malformed input.

json gauss_to_json(const GaussRat& z);
GaussRat gauss_from_json(const json& j);

/// {"num": [...], "den": [...]} with ascending coefficients; "den" omitted when 1.
/// A bare GaussRat string parses as a constant.
json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json mero_to_json(const MeroVector& v);
MeroVector mero_from_json(const json& j);

json exact_vector_to_json(const ExactVector& v);
ExactVector exact_vector_from_json(const json& j);

/// List of columns.
json columns_to_json(const ExactMatrix& m);
ExactMatrix columns_from_json(const json& j, size_t rows);

/// {"n", "k", "L", "S"}, column-major: L[column][offset] = l_column^offset.
json pair_to_json(const AdaptedPair& p);
AdaptedPair pair_from_json(const json& j);

/// {"name"?, "n", "k", "Q_sign", "kind"?, "F0_basis"?, "array", "pair"?, "seed"?, "points"?}.
json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);
Scenario parse_scenario(const std::string& text);

json report_to_json(const CheckReport& r);

/// Basis vectors split into lambda-blocks of GaussRat text.
json model_to_json(const ModelSpace& w);

}  // namespace uniton
