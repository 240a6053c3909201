#include "etsys/tsystem.hpp"

#include <cstdlib>
#include <sstream>

#include "etsys/error.hpp"
#include "etsys/lusztig.hpp"
#include "etsys/reineke.hpp"

namespace etsys {

const char* to_string(Tfd t) {
  switch (t) {
    case Tfd::Zero: return "0";
    case Tfd::One: return "1";
    case Tfd::Indeterminate: return "?";
  }
  return "?";
}

namespace {

bool lower_region(Region r) { return r == Region::Lt || r == Region::U; }

int theta2_gap(const HeightFunction& xi, int i, int j) {
  auto Th = HeightFunction::Theta(xi.n0());
  return std::abs(Th.xi2(i) - Th.xi2(j));
}

}  // namespace

Tfd predicted_tfd_left(const HeightFunction& xi, const Vertex& v, const Points& p, char* rule) {
  auto fired = [&](char c, Tfd t) {
    if (rule) *rule = c;
    return t;
  };
  if (rule) *rule = '-';
  if (p.empty() || !is_prime_snake(xi, p) || !prec(xi, v, p.front())) return Tfd::Indeterminate;
  const Vertex& w = p.front();
  if (in_prime_snake_position(xi, v, w)) return fired('a', Tfd::One);
  const int gap2 = w.k2 - v.k2;
  if (!xi.twisted()) {
    if (!in_snake_position(xi, v, w) && gap2 == 2 * std::abs(w.i - v.i)) return fired('b', Tfd::Zero);
    return Tfd::Indeterminate;
  }
  if (gap2 > 0 && theta2_gap(xi, w.i, v.i) == gap2) return fired('b', Tfd::Zero);
  Region rv = region(xi, v), rw = region(xi, w);
  if (rv == Region::U && (rw == Region::Gt || rw == Region::U)) return fired('c', Tfd::Zero);
  if (rv == Region::D && (rw == Region::Lt || rw == Region::D)) return fired('c', Tfd::Zero);
  return Tfd::Indeterminate;
}

Tfd predicted_tfd_right(const HeightFunction& xi, const Points& p, const Vertex& v, char* rule) {
  const bool tw = xi.twisted();
  auto fired = [&](char c, Tfd t) {
    if (rule) *rule = tw ? static_cast<char>(c + 1) : c;
    return t;
  };
  if (rule) *rule = '-';
  if (p.empty() || !is_prime_snake(xi, p) || !prec(xi, p.back(), v)) return Tfd::Indeterminate;
  const Vertex& w = p.back();
  if (in_prime_snake_position(xi, w, v)) return fired('c', Tfd::One);
  const int gap2 = v.k2 - w.k2;
  if (!tw) {
    if (!in_snake_position(xi, w, v) && gap2 == 2 * std::abs(w.i - v.i)) return fired('d', Tfd::Zero);
    return Tfd::Indeterminate;
  }
  if (gap2 > 0 && theta2_gap(xi, w.i, v.i) == gap2) return fired('d', Tfd::Zero);
  Region rv = region(xi, v), rw = region(xi, w);
  if (lower_region(rw) && rv == Region::U) return fired('e', Tfd::Zero);
  if (!lower_region(rw) && rv == Region::D) return fired('e', Tfd::Zero);
  return Tfd::Indeterminate;
}

namespace {

std::optional<long long> untwisted_left(int n, const Vertex& v0, const Points& p0) {
  const int j = v0.i, dk = -2 - v0.k2;
  Points p = shift(p0, dk);
  auto xi = HeightFunction::canonical(n, j % 2);
  Vertex top{n + 1 - j, 2 * n};
  Points pre;
  for (const Vertex& u : p) {
    if (!preceq(xi, u, top)) break;
    pre.push_back(u);
  }
  if (pre.empty()) return 0;
  for (const Vertex& u : pre)
    if (!in_window(xi, u)) return std::nullopt;
  return epsilon(j, VertexDatum::from_points(Carrier::canonical(n, j % 2), pre));
}

std::optional<long long> untwisted_right(int n, const Points& p0, const Vertex& v0) {
  const int j = v0.i, js = n + 1 - j, delta = (n - j) % 2;
  Points p = shift(p0, 2 * (n + 1) - v0.k2);
  auto xi = HeightFunction::canonical(n, delta);
  Vertex bottom{js, 0};
  std::size_t s = p.size();
  while (s > 0 && preceq(xi, bottom, p[s - 1])) --s;
  Points suf(p.begin() + static_cast<long>(s), p.end());
  if (suf.empty()) return 0;
  for (const Vertex& u : suf)
    if (!in_window(xi, u)) return std::nullopt;
  return epsilon_star(js, VertexDatum::from_points(Carrier::canonical(n, delta), suf));
}

int shift_to(int from2, int to2) {
  int d = to2 - from2;
  if (d % 4 != 0) throw Error(ErrorKind::InvalidArgument, "normalizing shift is not a quiver symmetry");
  return d;
}

// Theta coordinates; flip applies D to everything. The probe must not end up in region D.
bool to_theta(const HeightFunction& xi, Vertex& v, Points& p, bool flip) {
  int t2 = theta_shift2(xi);
  v.k2 += t2;
  p = shift(p, t2);
  auto Th = HeightFunction::Theta(xi.n0());
  if (flip) {
    v = dualize_vertex(Th, v, 1);
    p = dualize(Th, p, 1);
  }
  return region(Th, v) != Region::D;
}

std::optional<long long> twisted_left(const HeightFunction& xi, Vertex v, Points p, bool flip) {
  const int n0 = xi.n0();
  auto Th = HeightFunction::Theta(n0);
  auto th = HeightFunction::theta(n0);
  if (!to_theta(xi, v, p, flip)) return std::nullopt;
  int d = shift_to(v.k2, Th.xi2(v.i) - 2 * Th.d(v.i));
  v.k2 += d;
  p = shift(p, d);
  Vertex u = dualize_vertex(Th, v, -1);
  Points pre;
  for (const Vertex& w : p) {
    if (!preceq(Th, w, u)) break;
    pre.push_back(w);
  }
  if (pre.empty()) return 0;
  for (const Vertex& w : pre)
    if (!in_window(Th, w)) return std::nullopt;
  Points pd = translate_twisted(n0, pre);
  Points q = translate_twisted(n0, {u});
  if (pd.empty()) return 0;
  Vertex m;
  if (q.size() == 1) {
    m = dualize_vertex(th, q[0], 1);
  } else if (q.size() == 2) {
    if (preceq(th, pd.front(), q[0])) return std::nullopt;
    m = dualize_vertex(th, q[1], 1);
  } else {
    return std::nullopt;
  }
  return untwisted_left(th.n(), m, pd);
}

std::optional<long long> twisted_right(const HeightFunction& xi, Points p, Vertex v, bool flip) {
  const int n0 = xi.n0(), n = 2 * n0 - 1;
  auto Th = HeightFunction::Theta(n0);
  auto th = HeightFunction::theta(n0);
  if (!to_theta(xi, v, p, flip)) return std::nullopt;
  int d = shift_to(v.k2, Th.xi2(n + 1 - v.i) + 2 * n);
  v.k2 += d;
  p = shift(p, d);
  Vertex u = dualize_vertex(Th, v, 1);
  std::size_t s = p.size();
  while (s > 0 && preceq(Th, u, p[s - 1])) --s;
  Points suf(p.begin() + static_cast<long>(s), p.end());
  if (suf.empty()) return 0;
  for (const Vertex& w : suf)
    if (!in_window(Th, w)) return std::nullopt;
  Points pd = translate_twisted(n0, suf);
  Points q = translate_twisted(n0, {u});
  if (pd.empty()) return 0;
  Vertex m;
  if (q.size() == 1) {
    m = dualize_vertex(th, q[0], -1);
  } else if (q.size() == 2) {
    Vertex z = dualize_vertex(th, q[1], -1);
    if (preceq(th, z, dualize_vertex(th, pd.back(), -1))) return std::nullopt;
    m = dualize_vertex(th, q[0], -1);
  } else {
    return std::nullopt;
  }
  return untwisted_right(n, pd, m);
}

}  // namespace

namespace detail {

std::optional<long long> twisted_left_route(const HeightFunction& xi, const Vertex& v, const Points& p, bool flip) {
  return twisted_left(xi, v, p, flip);
}

std::optional<long long> twisted_right_route(const HeightFunction& xi, const Points& p, const Vertex& v, bool flip) {
  return twisted_right(xi, p, v, flip);
}

}  // namespace detail

std::optional<long long> tfd_left_by_epsilon(const HeightFunction& xi, const Vertex& v, const Points& p) {
  if (!is_vertex(xi, v)) throw Error(ErrorKind::InvalidArgument, to_string(v) + " is not a vertex");
  for (const Vertex& w : p)
    if (!is_vertex(xi, w)) throw Error(ErrorKind::InvalidArgument, to_string(w) + " is not a vertex");
  if (p.empty()) return 0;
  if (!xi.twisted()) return untwisted_left(xi.n(), v, p);
  auto a = twisted_left(xi, v, p, false);
  return a ? a : twisted_left(xi, v, p, true);
}

std::optional<long long> tfd_right_by_epsilon(const HeightFunction& xi, const Points& p, const Vertex& v) {
  if (!is_vertex(xi, v)) throw Error(ErrorKind::InvalidArgument, to_string(v) + " is not a vertex");
  for (const Vertex& w : p)
    if (!is_vertex(xi, w)) throw Error(ErrorKind::InvalidArgument, to_string(w) + " is not a vertex");
  if (p.empty()) return 0;
  if (!xi.twisted()) return untwisted_right(xi.n(), p, v);
  auto a = twisted_right(xi, p, v, false);
  return a ? a : twisted_right(xi, p, v, true);
}

HypothesisReport check_theoremA_hypotheses(const HeightFunction& xi, const Points& p) {
  HypothesisReport rep;
  const int len = static_cast<int>(p.size());
  auto finish = [&](HypothesisCheck& h) {
    if (h.predicted != Tfd::Indeterminate) h.value = h.predicted == Tfd::One ? 1 : 0;
    else h.value = h.by_epsilon;
    if (h.predicted != Tfd::Indeterminate && h.by_epsilon && *h.by_epsilon != *h.value) h.contradiction = true;
    if (!h.value || *h.value != 1) rep.all_one = false;
    if (h.contradiction) rep.contradiction = true;
    rep.checks.push_back(h);
  };
  for (int a = 1; a <= len; ++a) {
    for (int b = a + 1; b <= len; ++b) {
      Points tail(p.begin() + a, p.begin() + b);
      HypothesisCheck l;
      l.a = a;
      l.b = b;
      l.left = true;
      l.predicted = predicted_tfd_left(xi, p[a - 1], tail);
      l.by_epsilon = tfd_left_by_epsilon(xi, p[a - 1], tail);
      finish(l);

      Points head(p.begin() + (a - 1), p.begin() + (b - 1));
      HypothesisCheck r;
      r.a = a;
      r.b = b;
      r.left = false;
      r.predicted = predicted_tfd_right(xi, head, p[b - 1]);
      r.by_epsilon = tfd_right_by_epsilon(xi, head, p[b - 1]);
      finish(r);
    }
  }
  return rep;
}

Flags flags(const HeightFunction& xi, const Points& p) {
  if (!is_snake(xi, p)) throw Error(ErrorKind::NotSnake, to_string(p) + " is not a snake");
  return Flags{true, is_prime_snake(xi, p)};
}

TSystemRelation extended_tsystem(const HeightFunction& xi, const Points& p) {
  if (p.size() < 2) throw Error(ErrorKind::TooShort, "an extended T-system needs at least two points");
  if (!is_prime_snake(xi, p)) throw Error(ErrorKind::NotPrimeSnake, to_string(p) + " is not a prime snake");
  TSystemRelation rel;
  rel.xi = xi;
  rel.p = p;
  rel.a = p;
  rel.b.assign(p.begin(), p.end() - 1);
  rel.c.assign(p.begin() + 1, p.end());
  rel.d.assign(p.begin() + 1, p.end() - 1);
  QRPair qr = qr_sequences(xi, p);
  rel.q = qr.q;
  rel.r = qr.r;
  rel.flags = flags(xi, p);
  rel.hypotheses_ok = check_theoremA_hypotheses(xi, p).all_one;
  return rel;
}

namespace {

std::string latex_module(const Points& p) {
  if (p.empty()) return "\\mathbf{1}";
  if (p.size() == 1) return "S_{" + std::to_string(p[0].i) + "," + format_k2(p[0].k2) + "}";
  std::string s = "S\\big(";
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (a) s += ",";
    s += "(" + std::to_string(p[a].i) + "," + format_k2(p[a].k2) + ")";
  }
  return s + "\\big)";
}

}  // namespace

std::string to_latex(const TSystemRelation& rel) {
  std::ostringstream o;
  o << "0 \\to " << latex_module(rel.q) << " \\otimes " << latex_module(rel.r) << " \\to " << latex_module(rel.b)
    << " \\otimes " << latex_module(rel.c) << " \\to " << latex_module(rel.a) << " \\otimes " << latex_module(rel.d)
    << " \\to 0";
  return o.str();
}

std::string to_text(const TSystemRelation& rel) {
  std::ostringstream o;
  o << "flavor " << to_string(rel.xi.flavor()) << "\n"
    << "P " << to_string(rel.p) << "\n"
    << "B " << to_string(rel.b) << "\n"
    << "C " << to_string(rel.c) << "\n"
    << "A " << to_string(rel.a) << "\n"
    << "D " << to_string(rel.d) << "\n"
    << "Q " << to_string(rel.q) << "\n"
    << "R " << to_string(rel.r) << "\n"
    << "real " << rel.flags.real << " prime " << rel.flags.prime << "\n"
    << "hypotheses_ok " << rel.hypotheses_ok << "\n";
  return o.str();
}

}  // namespace etsys
