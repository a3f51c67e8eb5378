#pragma once

#include "abelaut/construction/torsor.hpp"
#include "abelaut/torus/decomposition.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abelaut {

using Json = nlohmann::json;

// Parses a document; syntax errors become ParseError located at "source:line:column".
Json parse_json_text(std::string_view text, const std::string& source);
Json load_json_file(const std::string& path);

// Field readers; errors name the JSON path, e.g. "$.factors[1].J[0][1]".
Rational rational_from_json(const Json& j, const std::string& path);
Surd surd_from_json(const Json& j, const std::string& path);
SurdMatrix structure_from_json(const Json& j, const std::string& path);
IntMatrix int_matrix_from_json(const Json& j, const std::string& path);
TorsionPoint point_from_json(const Json& j, const std::string& path);

// {"g": 1, "J": [["0", "-1"], ["1", "0"]]}; g is optional but checked when present.
LatticeTorus parse_torus(const Json& j, const std::string& path = "$");

// A single torus (top-level "J") or a decomposition (top-level "factors").
struct SystemInput {
    IsogenyDecomposition decomp;
    std::vector<std::string> names;
    bool single_torus = false;
    std::optional<TorsionPoint> P;
    std::optional<unsigned> p;
    std::optional<long> chi;
    std::optional<int> entry_bound;
};

SystemInput parse_system(const Json& j);

// {"candidates": [{"name": ..., "phi": [[...]] | "identity", "c": [...]}]}
std::vector<FiberAutomorphism> parse_candidates(const Json& j, std::size_t dim);

Json to_json(const Rational& r);
Json to_json(const Surd& s);
Json to_json(const IntMatrix& m);
Json to_json(const SurdMatrix& m);
Json to_json(const TorsionPoint& x);
Json torus_to_json(const LatticeTorus& t);
Json decomposition_to_json(const IsogenyDecomposition& d);

}  // namespace abelaut
