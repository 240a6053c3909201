#include "etsys/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "etsys/error.hpp"
#include "etsys/reineke.hpp"
#include "etsys/snakes.hpp"
#include "etsys/tsystem.hpp"

namespace etsys {

void CheckResult::fail(const std::string& what) {
  if (failed == 0) first_failure = what;
  ++failed;
}

std::string to_string(const CheckResult& r) {
  std::ostringstream o;
  o << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed << " failed";
  if (r.skipped) o << ", " << r.skipped << " skipped";
  if (!r.tally.empty()) {
    o << " [";
    bool first = true;
    for (const auto& [k, c] : r.tally) {
      o << (first ? "" : " ") << k << "=" << c;
      first = false;
    }
    o << "]";
  }
  if (r.failed) o << "\n  first failure: " << r.first_failure;
  return o.str();
}

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(s);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class F>
void guarded(CheckResult& r, const std::string& ctx, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.fail(ctx + ": " + e.what());
  }
}

std::string vec_string(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
  return s + ")";
}

}  // namespace

VertexDatum random_datum(const Carrier& c, std::mt19937_64& rng, int max_count) {
  std::map<Vertex, long long> m;
  for (const Vertex& v : carrier_vertices(c))
    if (uniform(rng, 0, 2) == 0) m[v] = uniform(rng, 1, max_count);
  return VertexDatum(c, m);
}

long long epsilon_star_via_words(int j, const VertexDatum& c) {
  if (c.carrier().kind != Carrier::Kind::Canonical) throw Error(ErrorKind::WrongCarrier, "needs a canonical carrier");
  const int n = c.carrier().n, dual = 1 - c.carrier().index;
  LusztigDatum s = star_datum(c.as_lusztig());
  auto roots = RootSystem(n).inversion_sequence(s.word());
  auto target = HeightFunction::canonical(n, dual);
  std::map<Root, Vertex> back;
  for (const auto& [v, r] : phi_map(target)) back[r] = v;
  std::map<Vertex, std::size_t> pos;
  std::map<Vertex, long long> counts;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Vertex v = back.at(roots[r]);
    if (v.i != s.word()[r]) throw Error(ErrorKind::WrongCarrier, "starred word is not adapted to the dual carrier");
    pos[v] = r;
    counts[v] = s.counts()[r];
  }
  for (const Vertex& v : gamma_window(target))
    for (const Vertex& w : successors(target, v))
      if (pos.count(w) && pos[v] > pos[w])
        throw Error(ErrorKind::WrongCarrier, "starred word leaves the commutation class of the dual carrier");
  return epsilon_any(j, VertexDatum(Carrier::canonical(n, dual), counts));
}

CheckResult verify_move_walks(int walks, int steps, int max_n, std::uint64_t seed) {
  CheckResult res;
  res.name = "move walks";
  auto rng = make_rng(seed, 1);
  for (int w = 0; w < walks; ++w) {
    int n = uniform(rng, 2, std::max(2, max_n));
    auto xi = random_height(Flavor::Untwisted, n, rng);
    auto word = compatible_reading(xi).word;
    std::vector<long long> counts;
    for (std::size_t a = 0; a < word.size(); ++a) counts.push_back(uniform(rng, 0, 4));
    LusztigDatum d(n, word, counts);
    const auto w0 = d.weight();
    bool walk_ok = true;
    for (int s = 0; s < steps && walk_ok; ++s) {
      const auto& wd = d.word();
      std::vector<std::pair<int, int>> moves;  // (kind, position)
      for (int r = 1; r + 1 <= static_cast<int>(wd.size()); ++r)
        if (std::abs(wd[r - 1] - wd[r]) >= 2) moves.push_back({2, r});
      for (int r = 2; r + 1 <= static_cast<int>(wd.size()); ++r)
        if (wd[r - 2] == wd[r] && std::abs(wd[r - 2] - wd[r - 1]) == 1) moves.push_back({3, r});
      if (moves.empty()) break;
      auto [kind, r] = moves[uniform(rng, 0, static_cast<int>(moves.size()) - 1)];
      guarded(res, "walk " + std::to_string(w), [&] {
        LusztigDatum e = kind == 2 ? two_move(d, r) : apply_three_move(d, r);
        LusztigDatum back = kind == 2 ? two_move(e, r) : apply_three_move(e, r);
        if (back != d) {
          res.fail(std::to_string(kind) + "-move at " + std::to_string(r) + " is not an involution");
          walk_ok = false;
          return;
        }
        if (e.weight() != w0) {
          res.fail("weight changed to " + vec_string(e.weight()) + " from " + vec_string(w0));
          walk_ok = false;
          return;
        }
        if (!RootSystem(n).is_reduced(e.word())) {
          res.fail("word stopped being reduced");
          walk_ok = false;
          return;
        }
        res.tally[kind == 2 ? "2-moves" : "3-moves"]++;
        d = e;
      });
    }
    if (walk_ok) res.pass();
  }
  return res;
}

CheckResult verify_rho_translation(int n0, int snakes, std::uint64_t seed) {
  CheckResult res;
  res.name = "rho vs translation, n0=" + std::to_string(n0);
  auto rng = make_rng(seed, 100 + n0);
  auto Th = HeightFunction::Theta(n0);
  auto th = HeightFunction::theta(n0);
  for (int s = 0; s < snakes; ++s) {
    bool prime = uniform(rng, 0, 1) == 1;
    Points p = random_window_snake(Th, rng, uniform(rng, 1, 6), prime);
    guarded(res, to_string(p), [&] {
      Points pd = translate_twisted(n0, p);
      if (!pd.empty() && !is_snake(th, pd)) {
        res.fail(to_string(p) + " translates to the non-snake " + to_string(pd));
        return;
      }
      VertexDatum lhs = rho(VertexDatum::from_points(Carrier::gamma_Theta(n0), p));
      VertexDatum rhs = VertexDatum::from_points(Carrier::gamma_theta(n0), pd);
      if (lhs != rhs) {
        res.fail(to_string(p) + ": rho gives " + to_string(lhs) + ", translation gives " + to_string(rhs));
        return;
      }
      res.tally[std::to_string(p.size()) + "pt"]++;
      res.pass();
    });
  }
  return res;
}

CheckResult verify_rho_order(int n0, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = "rho triple order, n0=" + std::to_string(n0);
  auto rng = make_rng(seed, 200 + n0);
  const int n = 2 * n0 - 1;
  for (int t = 0; t < trials; ++t) {
    VertexDatum a = random_datum(Carrier::gamma_Theta(n0), rng);
    VertexDatum b = a;
    guarded(res, to_string(a), [&] {
      for (int j = n0; j <= n; ++j) {
        a = rho_step(j, a, TripleOrder::Ascending);
        b = rho_step(j, b, TripleOrder::Descending);
      }
      if (a != b) res.fail("orders differ: " + to_string(a) + " vs " + to_string(b));
      else res.pass();
    });
  }
  return res;
}

CheckResult verify_rho_weight(int n0, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = "rho weight, n0=" + std::to_string(n0);
  auto rng = make_rng(seed, 300 + n0);
  for (int t = 0; t < trials; ++t) {
    VertexDatum c = random_datum(Carrier::gamma_Theta(n0), rng);
    guarded(res, to_string(c), [&] {
      auto w1 = c.as_lusztig().weight();
      auto w2 = rho(c).as_lusztig().weight();
      if (w1 != w2) res.fail(to_string(c) + ": weight " + vec_string(w1) + " becomes " + vec_string(w2));
      else res.pass();
    });
  }
  return res;
}

CheckResult verify_chain_words(int n0) {
  CheckResult res;
  res.name = "chain words, n0=" + std::to_string(n0);
  const int n = 2 * n0 - 1;
  RootSystem rs(n);
  for (int j = n0; j <= n + 1; ++j) {
    auto w = carrier_word(Carrier::chain(n0, j));
    if (rs.is_longest_word(w)) res.pass();
    else res.fail("i<" + std::to_string(j) + "> is not a reduced word of w0");
  }
  return res;
}

CheckResult verify_phi_closed_form(int n) {
  CheckResult res;
  res.name = "phi closed form, n=" + std::to_string(n);
  for (int delta : {0, 1}) {
    auto xi = HeightFunction::canonical(n, delta);
    for (const auto& [v, r] : phi_map(xi)) {
      Root c = phi_closed_form(n, v);
      if (c == r) res.pass();
      else res.fail("delta=" + std::to_string(delta) + " " + to_string(v) + ": " + to_string(c) + " vs " + to_string(r));
    }
  }
  return res;
}

CheckResult verify_omega(int n) {
  CheckResult res;
  res.name = "omega, n=" + std::to_string(n);
  for (int j = 1; j <= n; ++j) {
    auto a = omega(n, j), b = omega_by_roots(n, j);
    if (a == b && static_cast<int>(a.size()) == j * (n + 1 - j)) res.pass();
    else res.fail("j=" + std::to_string(j) + ": " + to_string(a) + " vs " + to_string(b));
  }
  return res;
}

CheckResult verify_reineke_agreement(int n, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = "reineke brute force vs min-cut, n=" + std::to_string(n);
  auto rng = make_rng(seed, 400 + n);
  for (int t = 0; t < trials; ++t) {
    int delta = t % 2;
    VertexDatum c = random_datum(Carrier::canonical(n, delta), rng);
    for (int j = 1; j <= n; ++j) {
      if (j % 2 != delta) continue;
      guarded(res, to_string(c), [&] {
        long long a = epsilon(j, c), b = epsilon_bruteforce(j, c);
        if (a != b) res.fail("j=" + std::to_string(j) + " " + to_string(c) + ": " + std::to_string(a) + " vs " + std::to_string(b));
        else res.pass();
      });
    }
  }
  return res;
}

CheckResult verify_reineke_unit(int n) {
  CheckResult res;
  res.name = "epsilon of a unit datum, n=" + std::to_string(n);
  for (int delta : {0, 1}) {
    auto carrier = Carrier::canonical(n, delta);
    for (const Vertex& v : carrier_vertices(carrier)) {
      VertexDatum c(carrier, {{v, 1}});
      for (int j = 1; j <= n; ++j) {
        long long e = epsilon_any(j, c);
        if (e == 0 || e == 1) res.pass();
        else res.fail(to_string(v) + " j=" + std::to_string(j) + " gives " + std::to_string(e));
      }
    }
  }
  return res;
}

CheckResult verify_epsilon_star(int n, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = "epsilon star duality, n=" + std::to_string(n);
  auto rng = make_rng(seed, 500 + n);
  for (int t = 0; t < trials; ++t) {
    VertexDatum c = random_datum(Carrier::canonical(n, t % 2), rng);
    for (int j = 1; j <= n; ++j) {
      guarded(res, to_string(c), [&] {
        long long a = epsilon_star(j, c), b = epsilon_star_via_words(j, c);
        if (a != b) res.fail("j=" + std::to_string(j) + " " + to_string(c) + ": " + std::to_string(a) + " vs " + std::to_string(b));
        else res.pass();
      });
    }
  }
  return res;
}

namespace {

int random_rank(Flavor f, std::mt19937_64& rng) {
  return f == Flavor::Twisted ? 2 * uniform(rng, 2, 4) - 1 : uniform(rng, 1, 6);
}

}  // namespace

CheckResult verify_being_snake(Flavor f, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = std::string("Q/R are disjoint snakes, ") + to_string(f);
  auto rng = make_rng(seed, f == Flavor::Twisted ? 601 : 600);
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 50 * trials; ++attempt) {
    auto xi = random_height(f, random_rank(f, rng), rng);
    const int nt = xi.ntilde();
    Points p;
    if (uniform(rng, 0, 2) == 0) {
      auto pool = vertices_between(xi, -2 * nt, 2 * nt);
      Vertex v = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)], w;
      if (!random_boundary_pair(xi, rng, v, uniform(rng, 0, 1) == 1, w)) continue;
      p = {v, w};
    } else {
      p = random_snake(xi, rng, uniform(rng, 2, 5), true, -4 * nt, 4 * nt);
    }
    if (p.size() < 2) continue;
    ++done;
    guarded(res, to_string(xi) + " " + to_string(p), [&] {
      QRPair qr = qr_sequences(xi, p);
      if (qr.q.empty()) res.tally["Q empty"]++;
      if (qr.r.empty()) res.tally["R empty"]++;
      for (const Points* part : {&qr.q, &qr.r}) {
        for (const Vertex& u : *part)
          if (!is_vertex(xi, u)) return res.fail(to_string(u) + " is not a vertex");
        if (!part->empty() && !is_snake(xi, *part)) return res.fail(to_string(*part) + " is not a snake, from " + to_string(p));
      }
      std::set<Vertex> qs(qr.q.begin(), qr.q.end());
      for (const Vertex& u : qr.r)
        if (qs.count(u)) return res.fail(to_string(p) + ": Q and R share " + to_string(u));
      res.pass();
    });
  }
  return res;
}

CheckResult verify_qr_equivariance(int n) {
  CheckResult res;
  res.name = "Q/R duality equivariance, n=" + std::to_string(n);
  for (int delta : {0, 1}) {
    auto xi = HeightFunction::canonical(n, delta);
    const int nt = xi.ntilde();
    for (const Vertex& v : vertices_between(xi, 0, 4 * nt - 1)) {
      for (const Vertex& w : vertices_between(xi, v.k2 + 1, v.k2 + 2 * nt)) {
        if (!in_prime_snake_position(xi, v, w)) continue;
        Vertex dv = dualize_vertex(xi, v, 1), dw = dualize_vertex(xi, w, 1);
        guarded(res, to_string(v) + "," + to_string(w), [&] {
          if (!in_prime_snake_position(xi, dv, dw)) return res.fail("D breaks primality at " + to_string(v));
          QRPair a = qr_untwisted(xi, v, w), b = qr_untwisted(xi, dv, dw);
          if (b.q == dualize(xi, a.r, 1) && b.r == dualize(xi, a.q, 1)) res.pass();
          else res.fail("v=" + to_string(v) + " w=" + to_string(w));
        });
      }
    }
  }
  return res;
}

CheckResult verify_predictions(Flavor f, int target, std::uint64_t seed) {
  CheckResult res;
  res.name = std::string("tfd predictions vs epsilon, ") + to_string(f);
  auto rng = make_rng(seed, f == Flavor::Twisted ? 701 : 700);
  int seen[2] = {0, 0};
  for (int attempt = 0; (seen[0] < target || seen[1] < target) && attempt < 400 * target; ++attempt) {
    bool left = seen[0] <= seen[1];
    auto xi = random_height(f, random_rank(f, rng), rng);
    const int nt = xi.ntilde();
    Points p = random_snake(xi, rng, uniform(rng, 1, 4), true, -4 * nt, 4 * nt);
    std::vector<Vertex> cand;
    if (left) {
      for (const Vertex& u : vertices_between(xi, p.front().k2 - 4 * nt, p.front().k2 - 1))
        if (prec(xi, u, p.front())) cand.push_back(u);
    } else {
      for (const Vertex& u : vertices_between(xi, p.back().k2 + 1, p.back().k2 + 4 * nt))
        if (prec(xi, p.back(), u)) cand.push_back(u);
    }
    if (cand.empty()) continue;
    Vertex v = cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)];
    guarded(res, to_string(xi) + " v=" + to_string(v) + " P=" + to_string(p), [&] {
      char rule = '-';
      Tfd pr = left ? predicted_tfd_left(xi, v, p, &rule) : predicted_tfd_right(xi, p, v, &rule);
      if (pr == Tfd::Indeterminate) return;
      auto e = left ? tfd_left_by_epsilon(xi, v, p) : tfd_right_by_epsilon(xi, p, v);
      if (!e) {
        ++res.skipped;
        return;
      }
      ++seen[left ? 0 : 1];
      res.tally[std::string("(") + rule + ")"]++;
      long long want = pr == Tfd::One ? 1 : 0;
      if (*e == want) res.pass();
      else res.fail("v=" + to_string(v) + " P=" + to_string(p) + " in " + to_string(xi) + ": rule (" + rule + ") says " +
                    std::to_string(want) + ", epsilon " + std::to_string(*e));
    });
  }
  if (seen[0] < target || seen[1] < target) res.fail("only " + std::to_string(seen[0]) + "/" + std::to_string(seen[1]) + " comparable cases");
  return res;
}

CheckResult verify_hypotheses(Flavor f, int trials, std::uint64_t seed) {
  CheckResult res;
  res.name = std::string("theorem hypotheses sweep, ") + to_string(f);
  auto rng = make_rng(seed, f == Flavor::Twisted ? 801 : 800);
  int primes = 0, others = 0;
  for (int attempt = 0; (primes < trials || others < trials / 4) && attempt < 50 * trials; ++attempt) {
    auto xi = random_height(f, random_rank(f, rng), rng);
    const int nt = xi.ntilde();
    bool prime = primes < trials && (others >= trials / 4 || uniform(rng, 0, 3) != 0);
    Points p = random_snake(xi, rng, uniform(rng, 2, 5), prime, -4 * nt, 4 * nt);
    if (p.size() < 2) continue;
    bool is_prime = is_prime_snake(xi, p);
    if (!prime && is_prime) continue;
    guarded(res, to_string(xi) + " " + to_string(p), [&] {
      HypothesisReport rep = check_theoremA_hypotheses(xi, p);
      if (rep.contradiction) return res.fail("contradiction on " + to_string(p) + " in " + to_string(xi));
      if (is_prime) {
        ++primes;
        if (!rep.all_one) return res.fail("prime snake " + to_string(p) + " in " + to_string(xi) + " has a value other than 1");
        res.tally["prime"]++;
      } else {
        ++others;
        bool zero = std::any_of(rep.checks.begin(), rep.checks.end(), [](const HypothesisCheck& h) { return h.value && *h.value == 0; });
        if (!zero) return res.fail("non-prime snake " + to_string(p) + " in " + to_string(xi) + " shows no 0");
        res.tally["non-prime"]++;
      }
      res.pass();
    });
  }
  return res;
}

std::vector<CheckResult> run_suite(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  bool known = all || suite == "moves" || suite == "rho" || suite == "reineke" || suite == "qr" || suite == "tfd";
  if (!known) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  if (all || suite == "moves") out.push_back(verify_move_walks(trials, 200, 6, seed));
  if (all || suite == "rho") {
    for (int n0 = 2; n0 <= 5; ++n0) {
      out.push_back(verify_chain_words(n0));
      out.push_back(verify_rho_translation(n0, trials, seed));
      out.push_back(verify_rho_order(n0, trials, seed));
      out.push_back(verify_rho_weight(n0, trials, seed));
    }
  }
  if (all || suite == "reineke") {
    for (int n = 2; n <= 6; ++n) {
      out.push_back(verify_phi_closed_form(n));
      out.push_back(verify_omega(n));
      out.push_back(verify_reineke_unit(n));
      out.push_back(verify_reineke_agreement(n, trials, seed));
      out.push_back(verify_epsilon_star(n, trials, seed));
    }
  }
  if (all || suite == "qr") {
    out.push_back(verify_being_snake(Flavor::Untwisted, trials, seed));
    out.push_back(verify_being_snake(Flavor::Twisted, trials, seed));
    for (int n = 1; n <= 6; ++n) out.push_back(verify_qr_equivariance(n));
  }
  if (all || suite == "tfd") {
    for (Flavor f : {Flavor::Untwisted, Flavor::Twisted}) {
      out.push_back(verify_predictions(f, trials, seed));
      out.push_back(verify_hypotheses(f, trials, seed));
    }
  }
  return out;
}

}  // namespace etsys
