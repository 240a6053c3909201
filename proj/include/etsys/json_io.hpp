#pragma once

#include <optional>

#include "json.hpp"

#include "etsys/lusztig.hpp"
#include "etsys/quiver.hpp"
#include "etsys/realize.hpp"
#include "etsys/tsystem.hpp"

namespace etsys {

using json = nlohmann::json;

json points_to_json(const Points& p);
Points points_from_json(const json& j);

struct SnakeInput {
  HeightFunction xi;
  Points points;
};

json snake_to_json(const HeightFunction& xi, const Points& p);
// parse errors raise Error(Parse); invalid heights keep their own kind
SnakeInput snake_from_json(const json& j);

json datum_to_json(const VertexDatum& d);
// "n" in the document wins over fallback_n
VertexDatum datum_from_json(const json& j, std::optional<int> fallback_n = std::nullopt);

json table_to_json(const Realization& re);
Realization table_from_json(const HeightFunction& xi, const json& j);

json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json relation_to_json(const TSystemRelation& rel, const RelationMonomials* mono = nullptr);

json parse_json_text(const std::string& text);

}  // namespace etsys
