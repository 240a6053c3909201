#include "etsys/lusztig.hpp"

#include <algorithm>
#include <cstdlib>

#include "etsys/error.hpp"

namespace etsys {

LusztigDatum::LusztigDatum(int n, std::vector<int> word, std::vector<long long> counts)
    : n_(n), word_(std::move(word)), counts_(std::move(counts)) {
  if (word_.size() != counts_.size())
    throw Error(ErrorKind::InvalidArgument, "word and counts differ in length");
  for (long long c : counts_)
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative count");
  RootSystem rs(n_);
  if (!rs.is_reduced(word_)) throw Error(ErrorKind::NotReduced, "word is not reduced");
}

LusztigDatum::LusztigDatum(Unchecked, int n, std::vector<int> word, std::vector<long long> counts)
    : n_(n), word_(std::move(word)), counts_(std::move(counts)) {}

std::vector<long long> LusztigDatum::weight() const {
  std::vector<long long> w(n_, 0);
  auto beta = RootSystem(n_).inversion_sequence(word_);
  for (std::size_t r = 0; r < beta.size(); ++r)
    for (int a = beta[r].lo; a <= beta[r].hi; ++a) w[a - 1] += counts_[r];
  return w;
}

LusztigDatum two_move(const LusztigDatum& d, int r) {
  if (r < 1 || r + 1 > static_cast<int>(d.size()))
    throw Error(ErrorKind::InvalidArgument, "2-move position out of range");
  if (std::abs(d.word_[r - 1] - d.word_[r]) < 2)
    throw Error(ErrorKind::NotCommuting, "letters at " + std::to_string(r) + " and " + std::to_string(r + 1) +
                                             " do not commute");
  auto w = d.word_;
  auto c = d.counts_;
  std::swap(w[r - 1], w[r]);
  std::swap(c[r - 1], c[r]);
  return LusztigDatum(LusztigDatum::Unchecked{}, d.n_, std::move(w), std::move(c));
}

std::array<long long, 3> three_move(long long a, long long b, long long c) {
  long long m = std::min(a, c);
  return {b + c - m, m, a + b - m};
}

LusztigDatum apply_three_move(const LusztigDatum& d, int r) {
  if (r < 2 || r + 1 > static_cast<int>(d.size()))
    throw Error(ErrorKind::InvalidArgument, "3-move position out of range");
  int i = d.word_[r - 2], j = d.word_[r - 1], i2 = d.word_[r];
  if (i != i2 || std::abs(i - j) != 1)
    throw Error(ErrorKind::NotBraidPattern, "no (i,j,i) pattern centred at " + std::to_string(r));
  auto w = d.word_;
  auto c = d.counts_;
  w[r - 2] = j;
  w[r - 1] = i;
  w[r] = j;
  auto t = three_move(c[r - 2], c[r - 1], c[r]);
  c[r - 2] = t[0];
  c[r - 1] = t[1];
  c[r] = t[2];
  return LusztigDatum(LusztigDatum::Unchecked{}, d.n_, std::move(w), std::move(c));
}

LusztigDatum star_datum(const LusztigDatum& d) {
  RootSystem rs(d.n_);
  if (!rs.is_longest_word(d.word_)) throw Error(ErrorKind::NotLongestWord, "star needs a word for w0");
  std::vector<int> w(d.word_.rbegin(), d.word_.rend());
  for (int& x : w) x = rs.star(x);
  std::vector<long long> c(d.counts_.rbegin(), d.counts_.rend());
  return LusztigDatum(LusztigDatum::Unchecked{}, d.n_, std::move(w), std::move(c));
}

Carrier Carrier::chain(int n0, int j) {
  if (n0 < 2) throw Error(ErrorKind::InvalidArgument, "n0 must be at least 2");
  int n = 2 * n0 - 1;
  if (j < n0 || j > n + 1) throw Error(ErrorKind::InvalidArgument, "chain index outside [n0, n+1]");
  return Carrier{Kind::Chain, n, j};
}

Carrier Carrier::canonical(int n, int delta) {
  if (n < 1 || (delta != 0 && delta != 1)) throw Error(ErrorKind::InvalidArgument, "bad canonical carrier");
  return Carrier{Kind::Canonical, n, delta};
}

std::string Carrier::name() const {
  if (kind == Kind::Canonical) return "delta:" + std::to_string(index);
  if (index == n0()) return "gamma-THETA";
  if (index == n + 1) return "gamma-theta";
  return "vj:" + std::to_string(index);
}

Carrier parse_carrier(const std::string& name, int n) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw Error(ErrorKind::Parse, "bad carrier '" + name + "'");
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad carrier '" + name + "'");
    }
  };
  if (name.rfind("delta:", 0) == 0) return Carrier::canonical(n, number(name.substr(6)));
  if (n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "chain carriers need odd n");
  int n0 = (n + 1) / 2;
  if (name == "gamma-THETA") return Carrier::gamma_Theta(n0);
  if (name == "gamma-theta") return Carrier::gamma_theta(n0);
  if (name.rfind("vj:", 0) == 0) return Carrier::chain(n0, number(name.substr(3)));
  throw Error(ErrorKind::Parse, "unknown carrier '" + name + "'");
}

std::vector<Vertex> carrier_vertices(const Carrier& c) {
  if (c.kind == Carrier::Kind::Canonical) return gamma_window(HeightFunction::canonical(c.n, c.index));
  const int n = c.n, n0 = c.n0(), j = c.index;
  if (j == n0) return gamma_window(HeightFunction::Theta(n0));
  auto theta_window = gamma_window(HeightFunction::theta(n0));
  if (j == n + 1) return theta_window;
  std::vector<Vertex> out;
  for (const Vertex& v : theta_window)
    if (v.i < j) out.push_back(v);
  for (int k = 0; k <= 2 * n - 2 * j + 1; ++k) out.push_back(Vertex{j, 2 * j - 3 + 2 * k});
  for (int i = j + 1; i <= n; ++i)
    for (int k = 0; k <= n - i; ++k) out.push_back(Vertex{i, 2 * (i - 1) + 4 * k});
  std::sort(out.begin(), out.end(), reading_less);
  if (static_cast<int>(out.size()) != n * (n + 1) / 2)
    throw Error(ErrorKind::WrongCarrier, "V<" + std::to_string(j) + "> has the wrong size");
  return out;
}

std::vector<int> carrier_word(const Carrier& c) {
  std::vector<int> w;
  for (const Vertex& v : carrier_vertices(c)) w.push_back(v.i);
  return w;
}

VertexDatum::VertexDatum(Carrier carrier, const std::map<Vertex, long long>& counts) : carrier_(carrier) {
  for (const Vertex& v : carrier_vertices(carrier_)) counts_[v] = 0;
  for (const auto& [v, c] : counts) {
    auto it = counts_.find(v);
    if (it == counts_.end())
      throw Error(ErrorKind::WrongCarrier, to_string(v) + " is not in carrier " + carrier_.name());
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative count at " + to_string(v));
    it->second = c;
  }
}

VertexDatum VertexDatum::from_points(Carrier carrier, const Points& p) {
  std::map<Vertex, long long> m;
  for (const Vertex& v : p) m[v] += 1;
  try {
    return VertexDatum(carrier, m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::WrongCarrier) throw Error(ErrorKind::NotInWindow, e.what());
    throw;
  }
}

long long VertexDatum::get(const Vertex& v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? 0 : it->second;
}

long long VertexDatum::total() const {
  long long s = 0;
  for (const auto& [v, c] : counts_) s += c;
  return s;
}

LusztigDatum VertexDatum::as_lusztig() const {
  std::vector<int> w;
  std::vector<long long> c;
  for (const Vertex& v : carrier_vertices(carrier_)) {
    w.push_back(v.i);
    c.push_back(counts_.at(v));
  }
  return LusztigDatum(carrier_.n, std::move(w), std::move(c));
}

std::string to_string(const VertexDatum& d) {
  std::string s = d.carrier().name() + " {";
  bool first = true;
  for (const auto& [v, c] : d.counts()) {
    if (c == 0) continue;
    if (!first) s += ", ";
    first = false;
    s += to_string(v) + ":" + std::to_string(c);
  }
  return s + "}";
}

VertexDatum rho_step(int j, const VertexDatum& d, TripleOrder order) {
  const Carrier& cin = d.carrier();
  if (cin.kind != Carrier::Kind::Chain || cin.index != j || j > cin.n)
    throw Error(ErrorKind::WrongCarrier, "rho_step(" + std::to_string(j) + ") applied to " + cin.name());
  const int n = cin.n, n0 = cin.n0();
  std::map<Vertex, long long> out;
  for (const auto& [v, c] : d.counts())
    if (v.i != j && v.i != j + 1) out[v] = c;

  std::vector<int> rs;
  for (int r = 0; r <= n - j - 1; ++r) rs.push_back(r);
  if (order == TripleOrder::Descending) std::reverse(rs.begin(), rs.end());
  for (int r : rs) {
    int mid2 = 2 * j + 4 * r;
    auto t = three_move(d.get({j, mid2 - 1}), d.get({j + 1, mid2}), d.get({j, mid2 + 1}));
    out[{j + 1, mid2 - 1}] = t[0];
    out[{j, mid2}] = t[1];
    out[{j + 1, mid2 + 1}] = t[2];
  }
  if (j > n0) out[{j, 2 * j - 4}] = d.get({j, 2 * j - 3});
  out[{j, 4 * n - 2 * j}] = d.get({j, 4 * n - 2 * j - 1});

  Carrier cout = Carrier::chain(n0, j + 1);
  if (out.size() != carrier_vertices(cout).size())
    throw Error(ErrorKind::WrongCarrier, "rho_step produced keys outside " + cout.name());
  return VertexDatum(cout, out);
}

VertexDatum rho(const VertexDatum& d) {
  const Carrier& c = d.carrier();
  if (c.kind != Carrier::Kind::Chain || c.index != c.n0())
    throw Error(ErrorKind::WrongCarrier, "rho expects data on gamma-THETA, got " + c.name());
  VertexDatum cur = d;
  for (int j = c.n0(); j <= c.n; ++j) cur = rho_step(j, cur);
  return cur;
}

}  // namespace etsys
