// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "etsys/error.hpp"
#include "etsys/lusztig.hpp"
#include "etsys/realize.hpp"
#include "etsys/snakes.hpp"
#include "etsys/tsystem.hpp"
#include "etsys/verify.hpp"

using namespace etsys;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_checks(const std::vector<CheckResult>& rs) {
  Outcome o{true, ""};
  long long passed = 0, skipped = 0;
  for (const auto& r : rs) {
    passed += r.passed;
    skipped += r.skipped;
    if (!r.ok()) {
      o.ok = false;
      if (o.detail.empty()) o.detail = to_string(r);
    }
  }
  if (o.ok) {
    o.detail = std::to_string(passed) + " cases";
    if (skipped) o.detail += ", " + std::to_string(skipped) + " skipped";
  }
  return o;
}

Outcome rho_golden(int n0, const Points& in, const Points& want) {
  Points t = translate_twisted(n0, in);
  VertexDatum r = rho(VertexDatum::from_points(Carrier::gamma_Theta(n0), in));
  bool ok = t == want && r == VertexDatum::from_points(Carrier::gamma_theta(n0), want);
  return {ok, "translate " + to_string(t) + ", rho " + to_string(r)};
}

Outcome c1() { return rho_golden(4, {{5, 8}, {5, 12}, {4, 17}, {4, 19}}, {{5, 6}, {5, 10}, {5, 14}, {4, 20}}); }

Outcome c2() {
  return rho_golden(8, {{9, 16}, {9, 20}, {8, 25}, {7, 30}, {8, 35}, {9, 40}},
                    {{9, 14}, {9, 18}, {9, 22}, {7, 30}, {9, 38}, {9, 42}});
}

Outcome c3() {
  std::vector<CheckResult> rs;
  for (int n0 = 2; n0 <= 5; ++n0) rs.push_back(verify_rho_translation(n0, 500, kSeed));
  return from_checks(rs);
}

Outcome c4() {
  auto xi = HeightFunction::untwisted({2, 4, 6});
  auto rel = extended_tsystem(xi, {{2, 0}, {2, 4}, {1, 10}});
  auto m = relation_monomials(rel, Realization::qdatum_A());
  bool ok = rel.q == Points{{1, 2}} && rel.r == Points{{3, 2}, {3, 6}} && rel.d == Points{{2, 4}} &&
            m.b * m.c == m.a * m.d;
  return {ok, "Q " + to_string(rel.q) + " R " + to_string(rel.r) + " D " + to_string(rel.d) + ", m(B)m(C) = " +
                  to_string(m.b * m.c)};
}

Outcome c5() {
  auto rel = extended_tsystem(HeightFunction::Theta(2), {{3, 4}, {2, 9}, {2, 11}});
  bool ok = rel.q == Points{{2, 5}, {1, 10}} && rel.r.empty();
  return {ok, "Q " + to_string(rel.q) + " R " + to_string(rel.r)};
}

Outcome c6() {
  std::vector<CheckResult> rs;
  for (int n = 2; n <= 8; ++n) rs.push_back(verify_phi_closed_form(n));
  Outcome o = from_checks(rs);
  auto a = [](int lo, int hi) { return Root{lo, hi, true}; };
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
  bool figs = phi_map(HeightFunction::canonical(5, 0)) == g0 && phi_map(HeightFunction::canonical(5, 1)) == g1;
  if (!figs) return {false, "n=5 labels differ from the figures"};
  if (o.ok) o.detail += ", n=5 figures match";
  return o;
}

Outcome c7() {
  std::vector<CheckResult> rs;
  // data alternate between the two parities, so 400 gives 200 per j
  for (int n = 2; n <= 6; ++n) rs.push_back(verify_reineke_agreement(n, 400, kSeed));
  return from_checks(rs);
}

Outcome c8() {
  std::vector<CheckResult> rs;
  for (Flavor f : {Flavor::Untwisted, Flavor::Twisted}) {
    rs.push_back(verify_predictions(f, 500, kSeed));
    rs.push_back(verify_hypotheses(f, 200, kSeed));
  }
  return from_checks(rs);
}

Outcome c9() { return from_checks({verify_move_walks(1000, 200, 6, kSeed)}); }

Outcome c10() {
  std::vector<CheckResult> rs{verify_being_snake(Flavor::Untwisted, 1000, kSeed),
                              verify_being_snake(Flavor::Twisted, 1000, kSeed)};
  for (int n = 1; n <= 6; ++n) rs.push_back(verify_qr_equivariance(n));
  return from_checks(rs);
}

Outcome c11() {
  std::vector<CheckResult> rs;
  for (int n = 1; n <= 6; ++n) rs.push_back(verify_epsilon_star(n, 200, kSeed));
  return from_checks(rs);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "rho golden n=7", 1.0, c1},
      {2, "rho golden n=15", 1.0, c2},
      {3, "rho vs translation, 500 snakes per n0 in 2..5", 30.0, c3},
      {4, "untwisted T-system golden + qdatum_A balance", 0, c4},
      {5, "twisted T-system golden", 0, c5},
      {6, "phi closed form n=2..8 + n=5 figures", 0, c6},
      {7, "Reineke min-cut vs brute force, n=2..6", 0, c7},
      {8, "tfd predictions vs epsilon, 500 per flavor and side", 0, c8},
      {9, "move walks 1000 x 200, n<=6", 0, c9},
      {10, "Q/R being_snake 1000 per flavor + D-equivariance n<=6", 0, c10},
      {11, "epsilon star duality, 200 data per n<=6", 0, c11},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(c.limit_s) + " s limit)";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2d %s  %-55s %8.3f s  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures;
}
