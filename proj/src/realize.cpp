#include "etsys/realize.hpp"

#include <algorithm>
#include <cstdlib>

#include "etsys/error.hpp"

namespace etsys {

Monomial Monomial::Y(int node, int spectral, int exp) {
  Monomial m;
  if (exp != 0) m.f_[{node, spectral}] = exp;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [key, e] : o.f_) {
    int& x = f_[key];
    x += e;
    if (x == 0) f_.erase(key);
  }
  return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  m *= o;
  return m;
}

bool Monomial::dominant() const {
  for (const auto& [key, e] : f_)
    if (e < 0) return false;
  return true;
}

Monomial Monomial::dual_shift(int rank, int h_dual, int sign) const {
  Monomial m;
  for (const auto& [key, e] : f_) m.f_[{rank + 1 - key.first, key.second + sign * h_dual}] = e;
  return m;
}

namespace {

std::string render(const Monomial& m, bool latex) {
  if (m.is_unit()) return "1";
  std::vector<std::pair<std::pair<int, int>, int>> fs(m.factors().begin(), m.factors().end());
  std::stable_sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  std::string s;
  for (const auto& [key, e] : fs) {
    s += "Y_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
    if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string to_string(const Monomial& m) { return render(m, false); }
std::string to_latex(const Monomial& m) { return render(m, true); }

const char* to_string(Realization::Mode m) {
  switch (m) {
    case Realization::Mode::QDatumA: return "qdatum_A";
    case Realization::Mode::QDatumB: return "qdatum_B";
    case Realization::Mode::Custom: return "custom";
  }
  return "?";
}

Realization Realization::qdatum_A() {
  Realization r;
  r.mode_ = Mode::QDatumA;
  return r;
}

Realization Realization::qdatum_B() {
  Realization r;
  r.mode_ = Mode::QDatumB;
  return r;
}

Realization Realization::custom(const HeightFunction& xi, int h_dual, std::map<Vertex, Monomial> table, int rank) {
  if (h_dual < 1) throw Error(ErrorKind::InvalidArgument, "h_dual must be positive");
  Realization r;
  r.mode_ = Mode::Custom;
  r.h_dual_ = h_dual;
  r.rank_ = rank > 0 ? rank : h_dual - 1;
  for (const auto& [v, m] : table)
    if (!in_window(xi, v)) throw Error(ErrorKind::InvalidArgument, "table entry " + to_string(v) + " is outside the window");
  for (const Vertex& v : gamma_window(xi))
    if (!table.count(v)) throw Error(ErrorKind::MissingTableEntry, "no table entry for " + to_string(v));
  r.table_ = std::move(table);
  r.xi_.push_back(xi);
  return r;
}

Monomial cuspidal_monomial(const Realization& re, const HeightFunction& xi, const Vertex& v) {
  if (!is_vertex(xi, v)) throw Error(ErrorKind::InvalidArgument, to_string(v) + " is not a vertex");
  switch (re.mode()) {
    case Realization::Mode::QDatumA:
      if (xi.twisted()) throw Error(ErrorKind::InvalidArgument, "qdatum_A needs an untwisted height function");
      return Monomial::Y(v.i, -v.k2 / 2);
    case Realization::Mode::QDatumB:
      if (!xi.twisted()) throw Error(ErrorKind::InvalidArgument, "qdatum_B needs a twisted height function");
      return Monomial::Y(std::min(v.i, xi.star(v.i)), -v.k2);
    case Realization::Mode::Custom:
      break;
  }
  if (!(*re.xi() == xi)) throw Error(ErrorKind::InvalidArgument, "table was built for a different height function");
  // v = D^t(u) with u in the window
  const int step = 2 * xi.ntilde();
  const int reach = (std::abs(v.k2) + std::abs(xi.xi2(1)) + 4 * xi.n()) / step + 2;
  for (int t = -reach; t <= reach; ++t) {
    Vertex u = v;
    int s = t > 0 ? -1 : 1;
    for (int a = 0; a < std::abs(t); ++a) u = dualize_vertex(xi, u, s);
    auto it = re.table().find(u);
    if (it == re.table().end()) continue;
    Monomial m = it->second;
    for (int a = 0; a < std::abs(t); ++a) m = m.dual_shift(re.rank(), re.h_dual(), t > 0 ? 1 : -1);
    return m;
  }
  throw Error(ErrorKind::MissingTableEntry, "no table entry reaches " + to_string(v));
}

SnakeMonomial snake_monomial(const Realization& re, const HeightFunction& xi, const Points& p) {
  SnakeMonomial out;
  out.exact = re.mode() != Realization::Mode::Custom;
  for (const Vertex& v : p) out.monomial *= cuspidal_monomial(re, xi, v);
  return out;
}

RelationMonomials relation_monomials(const TSystemRelation& rel, const Realization& re) {
  RelationMonomials m;
  auto get = [&](const Points& p) {
    auto s = snake_monomial(re, rel.xi, p);
    m.exact = m.exact && s.exact;
    return s.monomial;
  };
  m.a = get(rel.a);
  m.b = get(rel.b);
  m.c = get(rel.c);
  m.d = get(rel.d);
  m.q = get(rel.q);
  m.r = get(rel.r);
  if (m.b * m.c != m.a * m.d)
    throw Error(ErrorKind::InvalidArgument, "m(B)m(C) differs from m(A)m(D)");
  return m;
}

std::string to_text(const RelationMonomials& m) {
  return "[" + to_string(m.b) + "][" + to_string(m.c) + "] = [" + to_string(m.a) + "][" + to_string(m.d) + "] + [" +
         to_string(m.q) + "][" + to_string(m.r) + "]" + (m.exact ? "" : "  (formal)");
}

std::string to_latex(const RelationMonomials& m) {
  auto L = [](const Monomial& x) { return "L(" + to_latex(x) + ")"; };
  return "0 \\to " + L(m.q) + " \\otimes " + L(m.r) + " \\to " + L(m.b) + " \\otimes " + L(m.c) + " \\to " + L(m.a) +
         " \\otimes " + L(m.d) + " \\to 0";
}

}  // namespace etsys
