#include "etsys/reineke.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "etsys/error.hpp"

namespace etsys {

namespace {

int canonical_delta(const VertexDatum& c) {
  if (c.carrier().kind != Carrier::Kind::Canonical)
    throw Error(ErrorKind::WrongCarrier, "Reineke data live on Gamma^(delta), got " + c.carrier().name());
  return c.carrier().index;
}

void check_j(int n, int j) { RootSystem(n).check_node(j); }

// u < v within omega, as index pairs
std::vector<std::vector<int>> below(const HeightFunction& xi, const std::vector<Vertex>& om) {
  std::vector<std::vector<int>> out(om.size());
  for (std::size_t a = 0; a < om.size(); ++a)
    for (std::size_t b = 0; b < om.size(); ++b)
      if (a != b && preceq(xi, om[b], om[a])) out[a].push_back(static_cast<int>(b));
  return out;
}

}  // namespace

std::vector<Vertex> omega(int n, int j) {
  check_j(n, j);
  auto xi = HeightFunction::canonical(n, j % 2);
  Vertex lo{j, 2}, hi{n + 1 - j, 2 * n};
  std::vector<Vertex> out;
  for (const Vertex& v : gamma_window(xi))
    if (preceq(xi, lo, v) && preceq(xi, v, hi)) out.push_back(v);
  return out;
}

std::vector<Vertex> omega_by_roots(int n, int j) {
  check_j(n, j);
  auto xi = HeightFunction::canonical(n, j % 2);
  std::vector<Vertex> out;
  for (const Vertex& v : gamma_window(xi)) {
    Root r = phi(xi, v);
    if (r.lo <= j && j <= r.hi) out.push_back(v);
  }
  return out;
}

long long closure_weight(const VertexDatum& c, const Vertex& v) { return c.get(v) - c.get({v.i, v.k2 - 4}); }

long long epsilon(int j, const VertexDatum& c) {
  const int n = c.carrier().n;
  if (canonical_delta(c) != j % 2) throw Error(ErrorKind::ParityMismatch, "carrier parity differs from j");
  auto om = omega(n, j);
  auto xi = HeightFunction::canonical(n, j % 2);
  auto lower = below(xi, om);

  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long long,
                      boost::property<boost::edge_residual_capacity_t, long long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  const int m = static_cast<int>(om.size());
  Graph g(m + 2);
  const int s = m, t = m + 1;
  auto cap = boost::get(boost::edge_capacity, g);
  auto rev = boost::get(boost::edge_reverse, g);
  auto add = [&](int a, int b, long long w) {
    auto e = boost::add_edge(a, b, g).first;
    auto r = boost::add_edge(b, a, g).first;
    cap[e] = w;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
  };

  long long pos = 0;
  for (int a = 0; a < m; ++a) {
    long long w = closure_weight(c, om[a]);
    if (w > 0) {
      add(s, a, w);
      pos += w;
    } else if (w < 0) {
      add(a, t, -w);
    }
  }
  const long long inf = pos + 1;
  for (int a = 0; a < m; ++a)
    for (int b : lower[a]) add(a, b, inf);
  long long cut = boost::push_relabel_max_flow(g, s, t);
  return pos - cut;
}

long long epsilon_bruteforce(int j, const VertexDatum& c) {
  const int n = c.carrier().n;
  if (canonical_delta(c) != j % 2) throw Error(ErrorKind::ParityMismatch, "carrier parity differs from j");
  auto om = omega(n, j);  // reading order is a linear extension
  auto xi = HeightFunction::canonical(n, j % 2);
  auto lower = below(xi, om);
  std::vector<long long> w;
  for (const Vertex& v : om) w.push_back(closure_weight(c, v));

  std::vector<char> in(om.size(), 0);
  long long best = 0;
  std::function<void(std::size_t, long long)> go = [&](std::size_t a, long long sum) {
    if (a == om.size()) {
      best = std::max(best, sum);
      return;
    }
    go(a + 1, sum);
    bool ok = std::all_of(lower[a].begin(), lower[a].end(), [&](int b) { return in[b] != 0; });
    if (ok) {
      in[a] = 1;
      go(a + 1, sum + w[a]);
      in[a] = 0;
    }
  };
  go(0, 0);
  return best;
}

long long epsilon_other_parity(int j, const VertexDatum& c) {
  check_j(c.carrier().n, j);
  if (canonical_delta(c) == j % 2) throw Error(ErrorKind::ParityMismatch, "carrier parity equals j");
  return c.get({j, 0});
}

long long epsilon_any(int j, const VertexDatum& c) {
  return canonical_delta(c) == j % 2 ? epsilon(j, c) : epsilon_other_parity(j, c);
}

VertexDatum dual_datum(const VertexDatum& c) {
  const int n = c.carrier().n;
  int delta = canonical_delta(c);
  std::map<Vertex, long long> out;
  for (const auto& [v, x] : c.counts()) out[Vertex{n + 1 - v.i, 2 * n - v.k2}] = x;
  return VertexDatum(Carrier::canonical(n, 1 - delta), out);
}

long long epsilon_star(int j, const VertexDatum& c) { return epsilon_any(j, dual_datum(c)); }

}  // namespace etsys
