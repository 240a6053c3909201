#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "etsys/error.hpp"
#include "etsys/quiver.hpp"
#include "etsys/snakes.hpp"
#include "oracles.hpp"

using namespace etsys;

namespace {

Root a(int lo, int hi) { return Root{lo, hi, true}; }

void check_phi(const HeightFunction& xi, const std::map<Vertex, Root>& expected) {
  auto got = phi_map(xi);
  CHECK(got.size() == expected.size());
  for (const auto& [v, r] : expected) {
    INFO(to_string(v));
    REQUIRE(got.count(v) == 1);
    CHECK(got.at(v) == r);
  }
}

}  // namespace

TEST_CASE("height function validation") {
  CHECK_NOTHROW(HeightFunction::untwisted({4, 2, 4, 6, 8}));
  CHECK_THROWS_AS(HeightFunction::untwisted({0, 4}), Error);
  CHECK_THROWS_AS(HeightFunction::untwisted({1, 3}), Error);
  CHECK_NOTHROW(HeightFunction::twisted(3, {-2, 0, -1, 2, 4}));
  // n must be 2 n0 - 1
  CHECK_THROWS_AS(HeightFunction::twisted(3, {0, 2, 1, 2}), Error);
  // xi_{n0} must sit half a step from the smaller neighbour
  CHECK_THROWS_AS(HeightFunction::twisted(3, {-2, 0, 3, 2, 4}), Error);
  try {
    HeightFunction::untwisted({0, 6});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidHeight);
  }
}

TEST_CASE("d_i and ntilde") {
  auto t = HeightFunction::Theta(3);
  CHECK(t.d(3) == 1);
  CHECK(t.d(2) == 2);
  CHECK(t.ntilde() == 5);
  CHECK(HeightFunction::canonical(5, 0).ntilde() == 6);
}

TEST_CASE("theta and Theta values") {
  // theta_i = i (i <= n0), i - 2 (i > n0); Theta_i = i, n0 - 1/2, i - 1
  CHECK(HeightFunction::theta(3).values2() == std::vector<int>{2, 4, 6, 4, 6});
  CHECK(HeightFunction::Theta(3).values2() == std::vector<int>{2, 4, 5, 6, 8});
  CHECK(HeightFunction::Theta(2).values2() == std::vector<int>{2, 3, 4});
}

TEST_CASE("sinks, sources and reflection") {
  auto xi = HeightFunction::untwisted({4, 2, 4, 6, 8});
  CHECK(sinks(xi) == std::vector<int>{2});
  CHECK(sources(xi) == std::vector<int>{1, 5});
  auto r = reflect_height(xi, 2);
  CHECK(r.values2() == std::vector<int>{4, 6, 4, 6, 8});
  CHECK_THROWS_AS(reflect_height(xi, 3), Error);
  // sink then source at the same node gives back xi
  CHECK(reflect_height(r, 2) == xi);
}

TEST_CASE("twisted reflection moves n0 by a half step") {
  auto t = HeightFunction::Theta(2);  // (1, 3/2, 2)
  CHECK(sinks(t) == std::vector<int>{1});
  auto r = reflect_height(t, 1);
  CHECK(r.values2() == std::vector<int>{6, 3, 4});
}

TEST_CASE("untwisted Gamma figure for xi = (2,1,2,3,4)") {
  auto xi = HeightFunction::untwisted({4, 2, 4, 6, 8});
  std::map<Vertex, Root> e{
      {{1, 4}, a(1, 2)},  {{1, 8}, a(3, 3)},  {{1, 12}, a(4, 4)}, {{1, 16}, a(5, 5)},
      {{2, 2}, a(2, 2)},  {{2, 6}, a(1, 3)},  {{2, 10}, a(3, 4)}, {{2, 14}, a(4, 5)},
      {{3, 4}, a(2, 3)},  {{3, 8}, a(1, 4)},  {{3, 12}, a(3, 5)}, {{4, 6}, a(2, 4)},
      {{4, 10}, a(1, 5)}, {{5, 8}, a(2, 5)},  {{5, 12}, a(1, 1)},
  };
  check_phi(xi, e);
  CHECK(gamma_window(xi).size() == 15);
}

TEST_CASE("twisted Gamma figure for xi = (-1,0,-1/2,1,2)") {
  auto xi = HeightFunction::twisted(3, {-2, 0, -1, 2, 4});
  std::map<Vertex, Root> e{
      {{1, -2}, a(1, 1)}, {{1, 2}, a(2, 3)},  {{1, 6}, a(4, 4)}, {{1, 10}, a(5, 5)},
      {{2, 0}, a(1, 3)},  {{2, 4}, a(2, 4)},  {{2, 8}, a(4, 5)}, {{3, -1}, a(3, 3)},
      {{3, 1}, a(1, 2)},  {{3, 3}, a(3, 4)},  {{3, 5}, a(2, 2)}, {{3, 7}, a(3, 5)},
      {{4, 2}, a(1, 4)},  {{4, 6}, a(2, 5)},  {{5, 4}, a(1, 5)},
  };
  check_phi(xi, e);
}

TEST_CASE("canonical windows for n = 5") {
  std::map<Vertex, Root> g0{
      {{1, 0}, a(1, 1)},  {{1, 4}, a(2, 3)}, {{1, 8}, a(4, 5)},  {{2, 2}, a(1, 3)}, {{2, 6}, a(2, 5)},
      {{2, 10}, a(4, 4)}, {{3, 0}, a(3, 3)}, {{3, 4}, a(1, 5)},  {{3, 8}, a(2, 4)}, {{4, 2}, a(3, 5)},
      {{4, 6}, a(1, 4)},  {{4, 10}, a(2, 2)}, {{5, 0}, a(5, 5)}, {{5, 4}, a(3, 4)}, {{5, 8}, a(1, 2)},
  };
  std::map<Vertex, Root> g1{
      {{1, 2}, a(1, 2)},  {{1, 6}, a(3, 4)}, {{1, 10}, a(5, 5)}, {{2, 0}, a(2, 2)}, {{2, 4}, a(1, 4)},
      {{2, 8}, a(3, 5)},  {{3, 2}, a(2, 4)}, {{3, 6}, a(1, 5)},  {{3, 10}, a(3, 3)}, {{4, 0}, a(4, 4)},
      {{4, 4}, a(2, 5)},  {{4, 8}, a(1, 3)}, {{5, 2}, a(4, 5)},  {{5, 6}, a(2, 3)}, {{5, 10}, a(1, 1)},
  };
  check_phi(HeightFunction::canonical(5, 0), g0);
  check_phi(HeightFunction::canonical(5, 1), g1);
  for (const auto& [v, r] : g0) CHECK(phi_closed_form(5, v) == r);
  for (const auto& [v, r] : g1) CHECK(phi_closed_form(5, v) == r);
}

TEST_CASE("closed form equals the inversion-sequence phi for n = 1..8") {
  for (int n = 1; n <= 8; ++n)
    for (int delta : {0, 1}) {
      auto xi = HeightFunction::canonical(n, delta);
      for (const auto& [v, r] : phi_map(xi)) CHECK(phi_closed_form(n, v) == r);
    }
}

TEST_CASE("phi is a bijection onto the positive roots") {
  for (int n = 1; n <= 7; ++n) {
    auto m = phi_map(HeightFunction::canonical(n, n % 2));
    std::set<Root> seen;
    for (const auto& [v, r] : m) seen.insert(r);
    CHECK(static_cast<int>(seen.size()) == n * (n + 1) / 2);
  }
}

TEST_CASE("phi outside the window throws") {
  auto xi = HeightFunction::canonical(3, 0);
  CHECK_THROWS_AS(phi(xi, {1, -4}), Error);
  CHECK_THROWS_AS(phi_closed_form(3, {1, 1}), Error);
}

TEST_CASE("compatible reading gives a reduced longest word") {
  for (int n = 1; n <= 6; ++n) {
    auto r = compatible_reading(HeightFunction::canonical(n, 0));
    CHECK(RootSystem(n).is_longest_word(r.word));
    CHECK(oracle::reduced(n, r.word));
  }
  auto t = compatible_reading(HeightFunction::Theta(3));
  CHECK(RootSystem(5).is_longest_word(t.word));
}

TEST_CASE("untwisted path order matches the closed form") {
  for (int n = 1; n <= 6; ++n)
    for (int delta : {0, 1}) {
      auto xi = HeightFunction::canonical(n, delta);
      for (const auto& v : gamma_window(xi))
        for (int i = 1; i <= n; ++i)
          for (int k2 = v.k2 - 8; k2 <= v.k2 + 24; ++k2) {
            Vertex w{i, k2};
            if (!is_vertex(xi, w)) continue;
            CHECK(preceq(xi, v, w) == oracle::untwisted_preceq(n, v, w));
          }
    }
}

TEST_CASE("arrows and successors") {
  auto xi = HeightFunction::canonical(3, 0);
  CHECK(has_arrow(xi, {1, 0}, {2, 2}));
  CHECK_FALSE(has_arrow(xi, {2, 2}, {1, 0}));
  CHECK(successors(xi, {2, 2}) == std::vector<Vertex>{{1, 4}, {3, 4}});
  auto t = HeightFunction::Theta(2);
  // n0 row advances by half steps
  CHECK(has_arrow(t, {2, 5}, {1, 6}));
  CHECK(has_arrow(t, {1, 2}, {2, 3}));
  CHECK(successors(t, {1, 1}).empty());
}

TEST_CASE("forward cone is the set above v") {
  auto xi = HeightFunction::canonical(4, 1);
  for (const Vertex& w : forward_cone(xi, {2, 0}, 12)) {
    CHECK(preceq(xi, {2, 0}, w));
    CHECK(w.k2 <= 12);
  }
}

TEST_CASE("duality D and its inverse") {
  auto xi = HeightFunction::untwisted({2, 4, 6});
  CHECK(dualize_vertex(xi, {2, 4}) == Vertex{2, -4});
  CHECK(dualize_vertex(xi, {2, 0}, -1) == Vertex{2, 8});
  auto t = HeightFunction::Theta(3);
  Vertex v{2, 4};
  CHECK(dualize_vertex(t, dualize_vertex(t, v), -1) == v);
  CHECK(dualize_vertex(t, v) == Vertex{4, -6});
  CHECK(shift({{1, 2}}, 4) == Points{{1, 6}});
}

TEST_CASE("regions follow the n = 5 figure") {
  auto xi = HeightFunction::twisted(3, {0, 2, 3, 4, 6});
  CHECK(region(xi, {1, 0}) == Region::Lt);
  CHECK(region(xi, {5, 1}) == Region::Gt);
  CHECK(region(xi, {3, -5}) == Region::D);
  CHECK(region(xi, {3, -3}) == Region::U);
  // D swaps Lt with Gt and D with U
  for (const Vertex& v : vertices_between(xi, -10, 10)) {
    Region r = region(xi, v), s = region(xi, dualize_vertex(xi, v));
    if (r == Region::Lt) CHECK(s == Region::Gt);
    if (r == Region::Gt) CHECK(s == Region::Lt);
    if (r == Region::D) CHECK(s == Region::U);
    if (r == Region::U) CHECK(s == Region::D);
  }
  CHECK_THROWS_AS(region(HeightFunction::canonical(3, 0), {1, 0}), Error);
}

TEST_CASE("rendering is deterministic and labelled") {
  auto xi = HeightFunction::untwisted({4, 2, 4, 6, 8});
  auto dot = gamma_dot(xi);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot == gamma_dot(xi));
  CHECK(gamma_text(HeightFunction::canonical(1, 0)).size() > 0);
  CHECK(format_k2(-1) == "-1/2");
  CHECK(format_k2(17) == "17/2");
  CHECK(format_k2(6) == "3");
  CHECK(to_string(Points{{5, 8}, {4, 17}}) == "((5,4),(4,17/2))");
}
