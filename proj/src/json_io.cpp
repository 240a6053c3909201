#include "etsys/json_io.hpp"

#include "etsys/error.hpp"

namespace etsys {

namespace {

template <class F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace

json parse_json_text(const std::string& text) {
  return parse_guard([&] { return json::parse(text); });
}

json points_to_json(const Points& p) {
  json a = json::array();
  for (const Vertex& v : p) a.push_back({{"i", v.i}, {"k2", v.k2}});
  return a;
}

Points points_from_json(const json& j) {
  return parse_guard([&] {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "points must be an array");
    Points p;
    for (const json& e : j) p.push_back(Vertex{e.at("i").get<int>(), e.at("k2").get<int>()});
    return p;
  });
}

json snake_to_json(const HeightFunction& xi, const Points& p) {
  json j{{"flavor", to_string(xi.flavor())}, {"xi", xi.values2()}, {"points", points_to_json(p)}};
  if (xi.twisted()) j["n0"] = xi.n0();
  return j;
}

SnakeInput snake_from_json(const json& j) {
  auto [flavor, xi2, n0] = parse_guard([&] {
    std::string f = j.at("flavor").get<std::string>();
    if (f != "untwisted" && f != "twisted") throw Error(ErrorKind::Parse, "unknown flavor '" + f + "'");
    int m = j.contains("n0") ? j.at("n0").get<int>() : 0;
    return std::tuple{f, j.at("xi").get<std::vector<int>>(), m};
  });
  HeightFunction xi = flavor == "twisted" ? HeightFunction::twisted(n0 ? n0 : (static_cast<int>(xi2.size()) + 1) / 2, xi2)
                                          : HeightFunction::untwisted(xi2);
  Points p = points_from_json(parse_guard([&] { return j.at("points"); }));
  return SnakeInput{xi, p};
}

json datum_to_json(const VertexDatum& d) {
  json e = json::array();
  for (const auto& [v, c] : d.counts())
    if (c != 0) e.push_back({{"i", v.i}, {"k2", v.k2}, {"c", c}});
  return {{"carrier", d.carrier().name()}, {"n", d.carrier().n}, {"entries", e}};
}

VertexDatum datum_from_json(const json& j, std::optional<int> fallback_n) {
  auto [name, n, counts] = parse_guard([&] {
    std::string c = j.at("carrier").get<std::string>();
    int m = j.contains("n") ? j.at("n").get<int>() : fallback_n.value_or(0);
    std::map<Vertex, long long> cs;
    for (const json& e : j.at("entries")) {
      Vertex v{e.at("i").get<int>(), e.at("k2").get<int>()};
      if (cs.count(v)) throw Error(ErrorKind::Parse, "duplicate entry " + to_string(v));
      cs[v] = e.at("c").get<long long>();
    }
    return std::tuple{c, m, cs};
  });
  if (n < 1) throw Error(ErrorKind::Parse, "datum needs a rank: give \"n\"");
  return VertexDatum(parse_carrier(name, n), counts);
}

json monomial_to_json(const Monomial& m) {
  json a = json::array();
  for (const auto& [key, e] : m.factors()) a.push_back({{"node", key.first}, {"spectral", key.second}, {"exp", e}});
  return a;
}

Monomial monomial_from_json(const json& j) {
  return parse_guard([&] {
    Monomial m;
    for (const json& f : j) m *= Monomial::Y(f.at("node").get<int>(), f.at("spectral").get<int>(), f.at("exp").get<int>());
    return m;
  });
}

json table_to_json(const Realization& re) {
  if (re.mode() != Realization::Mode::Custom) throw Error(ErrorKind::InvalidArgument, "only custom realizations have tables");
  json e = json::array();
  for (const auto& [v, m] : re.table()) e.push_back({{"i", v.i}, {"k2", v.k2}, {"monomial", monomial_to_json(m)}});
  json j{{"h_dual", re.h_dual()}, {"entries", e}};
  if (re.rank() != re.h_dual() - 1) j["rank"] = re.rank();
  return j;
}

Realization table_from_json(const HeightFunction& xi, const json& j) {
  auto [h, rank, table] = parse_guard([&] {
    int hd = j.at("h_dual").get<int>();
    int rk = j.contains("rank") ? j.at("rank").get<int>() : 0;
    std::map<Vertex, Monomial> t;
    for (const json& e : j.at("entries")) t[Vertex{e.at("i").get<int>(), e.at("k2").get<int>()}] = monomial_from_json(e.at("monomial"));
    return std::tuple{hd, rk, t};
  });
  return Realization::custom(xi, h, table, rank);
}

json relation_to_json(const TSystemRelation& rel, const RelationMonomials* mono) {
  json j{{"flavor", to_string(rel.xi.flavor())},
         {"xi", rel.xi.values2()},
         {"P", points_to_json(rel.p)},
         {"B", points_to_json(rel.b)},
         {"C", points_to_json(rel.c)},
         {"A", points_to_json(rel.a)},
         {"D", points_to_json(rel.d)},
         {"Q", points_to_json(rel.q)},
         {"R", points_to_json(rel.r)},
         {"flags", {{"real", rel.flags.real}, {"prime", rel.flags.prime}}},
         {"hypotheses_ok", rel.hypotheses_ok}};
  if (rel.xi.twisted()) j["n0"] = rel.xi.n0();
  if (mono) {
    j["monomials"] = {{"A", to_string(mono->a)}, {"B", to_string(mono->b)}, {"C", to_string(mono->c)},
                      {"D", to_string(mono->d)}, {"Q", to_string(mono->q)}, {"R", to_string(mono->r)},
                      {"exact", mono->exact}};
  }
  return j;
}

}  // namespace etsys
