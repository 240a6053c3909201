#include "etsys/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "etsys/error.hpp"

namespace etsys {

const char* to_string(Flavor f) { return f == Flavor::Twisted ? "twisted" : "untwisted"; }

const char* to_string(Region r) {
  switch (r) {
    case Region::Lt: return "Lt";
    case Region::Gt: return "Gt";
    case Region::U: return "U";
    case Region::D: return "D";
  }
  return "?";
}

std::string format_k2(int k2) {
  if (k2 % 2 == 0) return std::to_string(k2 / 2);
  return std::to_string(k2) + "/2";
}

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.i) + "," + format_k2(v.k2) + ")";
}

std::string to_string(const Points& p) {
  std::string s = "(";
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (a) s += ",";
    s += to_string(p[a]);
  }
  return s + ")";
}

bool reading_less(const Vertex& a, const Vertex& b) {
  if (a.k2 != b.k2) return a.k2 < b.k2;
  return a.i < b.i;
}

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

HeightFunction::HeightFunction(Flavor f, int n0, std::vector<int> xi2)
    : flavor_(f), n0_(n0), xi2_(std::move(xi2)) {
  validate();
}

HeightFunction HeightFunction::untwisted(std::vector<int> xi2) {
  return HeightFunction(Flavor::Untwisted, 0, std::move(xi2));
}

HeightFunction HeightFunction::twisted(int n0, std::vector<int> xi2) {
  return HeightFunction(Flavor::Twisted, n0, std::move(xi2));
}

HeightFunction HeightFunction::canonical(int n, int delta) {
  if (n < 1 || (delta != 0 && delta != 1))
    throw Error(ErrorKind::InvalidArgument, "canonical height function needs n >= 1, delta in {0,1}");
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = 2 * mod(delta + i - 1, 2);
  return untwisted(std::move(v));
}

HeightFunction HeightFunction::theta(int n0) {
  if (n0 < 2) throw Error(ErrorKind::InvalidArgument, "n0 must be at least 2");
  int n = 2 * n0 - 1;
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = 2 * (i <= n0 ? i : i - 2);
  return untwisted(std::move(v));
}

HeightFunction HeightFunction::Theta(int n0) {
  if (n0 < 2) throw Error(ErrorKind::InvalidArgument, "n0 must be at least 2");
  int n = 2 * n0 - 1;
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i < n0 ? 2 * i : (i == n0 ? 2 * n0 - 1 : 2 * (i - 1));
  return twisted(n0, std::move(v));
}

void HeightFunction::validate() const {
  const int n = this->n();
  if (n < 1) throw Error(ErrorKind::InvalidHeight, "empty height function");
  auto bad = [](const std::string& m) { return Error(ErrorKind::InvalidHeight, m); };
  if (flavor_ == Flavor::Untwisted) {
    for (int i = 1; i <= n; ++i)
      if (mod(xi2_[i - 1], 2) != 0) throw bad("untwisted values must be integers");
    for (int i = 1; i < n; ++i)
      if (std::abs(xi2_[i - 1] - xi2_[i]) != 2)
        throw bad("|xi_i - xi_{i+1}| != 1 at i = " + std::to_string(i));
    return;
  }
  if (n0_ < 2 || n != 2 * n0_ - 1) throw bad("twisted height function needs n = 2 n0 - 1 with n0 >= 2");
  for (int i = 1; i <= n; ++i)
    if (i != n0_ && mod(xi2_[i - 1], 2) != 0) throw bad("xi_i must be an integer for i != n0");
  for (int i = 1; i < n; ++i) {
    if (i == n0_ - 1 || i == n0_) continue;
    if (std::abs(xi2_[i - 1] - xi2_[i]) != 2)
      throw bad("|xi_i - xi_{i+1}| != 1 at i = " + std::to_string(i));
  }
  int a = xi2(n0_ - 1), b = xi2(n0_ + 1);
  if (std::abs(a - b) != 2) throw bad("|xi_{n0-1} - xi_{n0+1}| != 1");
  if (std::abs(xi2(n0_) - std::min(a, b)) != 1) throw bad("|xi_{n0} - min(xi_{n0-1}, xi_{n0+1})| != 1/2");
}

int HeightFunction::xi2(int i) const {
  if (i < 1 || i > n()) throw Error(ErrorKind::RankMismatch, "node " + std::to_string(i) + " out of range");
  return xi2_[i - 1];
}

int HeightFunction::d(int i) const { return (flavor_ == Flavor::Twisted && i == n0_) ? 1 : 2; }

int HeightFunction::ntilde() const { return flavor_ == Flavor::Twisted ? n() : n() + 1; }

std::string to_string(const HeightFunction& xi) {
  std::string s = std::string(to_string(xi.flavor())) + " (";
  for (int i = 1; i <= xi.n(); ++i) {
    if (i > 1) s += ",";
    s += format_k2(xi.xi2(i));
  }
  s += ")";
  if (xi.twisted()) s += " n0=" + std::to_string(xi.n0());
  return s;
}

bool is_vertex(const HeightFunction& xi, const Vertex& v) {
  if (v.i < 1 || v.i > xi.n()) return false;
  return mod(v.k2 - xi.xi2(v.i), 2 * xi.d(v.i)) == 0;
}

std::vector<int> sinks(const HeightFunction& xi) {
  std::vector<int> out;
  for (int i = 1; i <= xi.n(); ++i) {
    bool ok = true;
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j <= xi.n() && !(xi.xi2(i) < xi.xi2(j))) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<int> sources(const HeightFunction& xi) {
  std::vector<int> out;
  for (int i = 1; i <= xi.n(); ++i) {
    bool ok = true;
    for (int j : {i - 1, i + 1})
      if (j >= 1 && j <= xi.n() && !(xi.xi2(i) - 2 * xi.d(i) > xi.xi2(j) - 2 * xi.d(j))) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

HeightFunction reflect_height(const HeightFunction& xi, int i) {
  auto sk = sinks(xi);
  auto sr = sources(xi);
  std::vector<int> v = xi.values2();
  if (std::find(sk.begin(), sk.end(), i) != sk.end())
    v[i - 1] += 2 * xi.d(i);
  else if (std::find(sr.begin(), sr.end(), i) != sr.end())
    v[i - 1] -= 2 * xi.d(i);
  else
    throw Error(ErrorKind::NotSinkOrSource, "node " + std::to_string(i) + " is neither a sink nor a source");
  return xi.twisted() ? HeightFunction::twisted(xi.n0(), std::move(v)) : HeightFunction::untwisted(std::move(v));
}

bool has_arrow(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (!is_vertex(xi, v) || !is_vertex(xi, w)) return false;
  if (std::abs(v.i - w.i) != 1) return false;
  return w.k2 - v.k2 == std::min(xi.d(v.i), xi.d(w.i));
}

std::vector<Vertex> successors(const HeightFunction& xi, const Vertex& v) {
  std::vector<Vertex> out;
  if (!is_vertex(xi, v)) return out;
  for (int j : {v.i - 1, v.i + 1}) {
    if (j < 1 || j > xi.n()) continue;
    Vertex w{j, v.k2 + std::min(xi.d(v.i), xi.d(j))};
    if (is_vertex(xi, w)) out.push_back(w);
  }
  return out;
}

namespace {

// reach[t * (n+1) + i]: (i, v.k2 + t) reachable from v
std::vector<char> sweep(const HeightFunction& xi, const Vertex& v, int span) {
  const int n = xi.n();
  std::vector<char> reach(static_cast<std::size_t>(span + 1) * (n + 1), 0);
  reach[v.i] = 1;
  for (int t = 0; t < span; ++t) {
    for (int i = 1; i <= n; ++i) {
      if (!reach[t * (n + 1) + i]) continue;
      for (const Vertex& w : successors(xi, Vertex{i, v.k2 + t})) {
        int s = w.k2 - v.k2;
        if (s <= span) reach[s * (n + 1) + w.i] = 1;
      }
    }
  }
  return reach;
}

}  // namespace

bool preceq(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (!is_vertex(xi, v) || !is_vertex(xi, w)) return false;
  if (w.k2 < v.k2) return false;
  if (v == w) return true;
  int span = w.k2 - v.k2;
  auto reach = sweep(xi, v, span);
  return reach[span * (xi.n() + 1) + w.i] != 0;
}

bool prec(const HeightFunction& xi, const Vertex& v, const Vertex& w) { return v != w && preceq(xi, v, w); }

std::vector<Vertex> forward_cone(const HeightFunction& xi, const Vertex& v, int k2_max) {
  std::vector<Vertex> out;
  if (!is_vertex(xi, v) || k2_max < v.k2) return out;
  int span = k2_max - v.k2;
  auto reach = sweep(xi, v, span);
  for (int t = 0; t <= span; ++t)
    for (int i = 1; i <= xi.n(); ++i)
      if (reach[t * (xi.n() + 1) + i]) out.push_back(Vertex{i, v.k2 + t});
  return out;
}

std::vector<Vertex> gamma_window(const HeightFunction& xi) {
  const int n = xi.n();
  std::vector<Vertex> out;
  for (int i = 1; i <= n; ++i) {
    int hi2 = 2 * (n - 1) + xi.xi2(xi.star(i));
    for (int k2 = xi.xi2(i); k2 <= hi2; k2 += 2 * xi.d(i)) out.push_back(Vertex{i, k2});
  }
  std::sort(out.begin(), out.end(), reading_less);
  if (static_cast<int>(out.size()) != n * (n + 1) / 2)
    throw Error(ErrorKind::InvalidHeight, "window size differs from n(n+1)/2");
  return out;
}

bool in_window(const HeightFunction& xi, const Vertex& v) {
  if (!is_vertex(xi, v)) return false;
  return v.k2 >= xi.xi2(v.i) && v.k2 <= 2 * (xi.n() - 1) + xi.xi2(xi.star(v.i));
}

Reading compatible_reading(const HeightFunction& xi) {
  Reading r;
  r.vertices = gamma_window(xi);
  for (const Vertex& v : r.vertices) r.word.push_back(v.i);
  return r;
}

std::map<Vertex, Root> phi_map(const HeightFunction& xi) {
  Reading r = compatible_reading(xi);
  auto beta = xi.roots().inversion_sequence(r.word);
  std::map<Vertex, Root> out;
  for (std::size_t a = 0; a < beta.size(); ++a) out.emplace(r.vertices[a], beta[a]);
  return out;
}

Root phi(const HeightFunction& xi, const Vertex& v) {
  if (!in_window(xi, v)) throw Error(ErrorKind::OutsideWindow, to_string(v) + " is not in the window");
  return phi_map(xi).at(v);
}

Root phi_closed_form(int n, const Vertex& v) {
  if (v.k2 % 2 != 0) throw Error(ErrorKind::OutsideWindow, "closed form needs integral k");
  int i = v.i, k = v.k2 / 2;
  int x = i - k > 0 ? i - k : k - i + 1;
  int y = i + k <= n ? i + k : 2 * n + 1 - i - k;
  if (x < 1 || y > n || x > y) throw Error(ErrorKind::OutsideWindow, to_string(v) + " outside the canonical window");
  return Root{x, y, true};
}

Vertex dualize_vertex(const HeightFunction& xi, const Vertex& v, int sign) {
  return Vertex{xi.star(v.i), v.k2 - sign * 2 * xi.ntilde()};
}

Points dualize(const HeightFunction& xi, const Points& p, int sign) {
  Points out;
  out.reserve(p.size());
  for (const Vertex& v : p) out.push_back(dualize_vertex(xi, v, sign));
  return out;
}

Points shift(const Points& p, int dk2) {
  Points out = p;
  for (Vertex& v : out) v.k2 += dk2;
  return out;
}

Region region(const HeightFunction& xi, const Vertex& v) {
  if (!xi.twisted()) throw Error(ErrorKind::InvalidArgument, "regions are defined for twisted height functions");
  if (v.i < xi.n0()) return Region::Lt;
  if (v.i > xi.n0()) return Region::Gt;
  return is_vertex(xi, Vertex{xi.n0() + 1, v.k2 + 1}) ? Region::D : Region::U;
}

namespace {

std::string node_id(const Vertex& v) {
  std::string s = "v" + std::to_string(v.i) + "_";
  s += v.k2 < 0 ? "m" + std::to_string(-v.k2) : std::to_string(v.k2);
  return s;
}

std::string label(const Vertex& v) { return std::to_string(v.i) + ":" + std::to_string(v.k2); }

}  // namespace

std::string quiver_dot(const HeightFunction& xi, int k2_min, int k2_max) {
  std::ostringstream os;
  os << "digraph Q {\n  rankdir=LR;\n";
  std::vector<Vertex> vs;
  for (int i = 1; i <= xi.n(); ++i)
    for (int k2 = k2_min; k2 <= k2_max; ++k2)
      if (is_vertex(xi, Vertex{i, k2})) vs.push_back(Vertex{i, k2});
  std::sort(vs.begin(), vs.end(), reading_less);
  for (const Vertex& v : vs) os << "  " << node_id(v) << " [label=\"" << label(v) << "\"];\n";
  for (const Vertex& v : vs)
    for (const Vertex& w : successors(xi, v))
      if (w.k2 <= k2_max) os << "  " << node_id(v) << " -> " << node_id(w) << ";\n";
  os << "}\n";
  return os.str();
}

std::string gamma_dot(const HeightFunction& xi) {
  auto ph = phi_map(xi);
  std::ostringstream os;
  os << "digraph Gamma {\n  rankdir=LR;\n";
  for (const auto& [v, r] : ph)
    os << "  " << node_id(v) << " [label=\"" << label(v) << "\\n" << to_string(r) << "\"];\n";
  for (const auto& [v, r] : ph)
    for (const Vertex& w : successors(xi, v))
      if (ph.count(w)) os << "  " << node_id(v) << " -> " << node_id(w) << ";\n";
  os << "}\n";
  return os.str();
}

std::string gamma_text(const HeightFunction& xi) {
  std::ostringstream os;
  for (const auto& [v, r] : phi_map(xi)) os << to_string(v) << " " << to_string(r) << "\n";
  return os.str();
}

}  // namespace etsys
