#pragma once

// Independent reference computations. Nothing here calls into the library
// except for plain data types and the quiver accessors used to enumerate vertices.

#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "etsys/lusztig.hpp"
#include "etsys/quiver.hpp"
#include "etsys/roots.hpp"

namespace oracle {

using etsys::Vertex;

// --- roots as coefficient vectors, reflections through the Cartan matrix

using Vec = std::vector<long long>;  // index 1..n, slot 0 unused

inline Vec simple(int n, int i) {
  Vec v(n + 1, 0);
  v[i] = 1;
  return v;
}

inline Vec reflect(int n, int i, Vec v) {
  // <v, alpha_i^vee> with the A_n Cartan matrix
  long long pair = 2 * v[i];
  if (i > 1) pair -= v[i - 1];
  if (i < n) pair -= v[i + 1];
  v[i] -= pair;
  return v;
}

inline Vec to_vec(int n, const etsys::Root& r) {
  Vec v(n + 1, 0);
  for (int a = r.lo; a <= r.hi; ++a) v[a] = r.positive ? 1 : -1;
  return v;
}

inline std::vector<Vec> inversions(int n, const std::vector<int>& word) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Vec v = simple(n, word[k]);
    for (std::size_t a = k; a-- > 0;) v = reflect(n, word[a], v);
    out.push_back(v);
  }
  return out;
}

inline bool is_positive(const Vec& v) {
  bool any = false;
  for (std::size_t a = 1; a < v.size(); ++a) {
    if (v[a] < 0) return false;
    any = any || v[a] > 0;
  }
  return any;
}

// reduced iff every inversion root is positive
inline bool reduced(int n, const std::vector<int>& word) {
  for (const Vec& v : inversions(n, word))
    if (!is_positive(v)) return false;
  return true;
}

inline Vec weight(int n, const std::vector<int>& word, const std::vector<long long>& counts) {
  Vec w(n + 1, 0);
  auto inv = inversions(n, word);
  for (std::size_t k = 0; k < inv.size(); ++k)
    for (int a = 1; a <= n; ++a) w[a] += counts[k] * inv[k][a];
  return w;
}

// --- closed-form path order on an untwisted repetition quiver

// v <= w iff the k-gap covers the row distance with matching parity.
// n = 1 has no arrows at all.
inline bool untwisted_preceq(int n, const Vertex& v, const Vertex& w) {
  if (n == 1) return v == w;
  int d = w.k2 - v.k2;
  int di = std::abs(w.i - v.i);
  // row walls: every path bounces at rows 1 and n, which does not change reachability in A_n
  return d >= 2 * di && (d - 2 * di) % 4 == 0;
}

// --- Q/R for untwisted pairs with k kept as an exact fraction

struct Frac {
  long long num = 0;
  long long den = 1;
  Frac(long long a = 0, long long b = 1) : num(a), den(b) {
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  bool integral() const { return den == 1; }
};

struct QR {
  bool has_q = false, has_r = false;
  Vertex q, r;
};

inline QR untwisted_qr(int n, const Vertex& v, const Vertex& w) {
  Frac half(1, 2);
  Frac i(v.i), k(v.k2, 2), ip(w.i), kp(w.k2, 2);
  QR out;
  if (!(kp - k == i + ip)) {
    Frac a = half * (i + ip + k - kp), b = half * (i - ip + k + kp);
    out.has_q = true;
    out.q = Vertex{static_cast<int>(a.num), static_cast<int>((b * Frac(2)).num)};
  }
  if (!(kp - k == Frac(2 * n + 2) - i - ip)) {
    Frac a = half * (i + ip - k + kp), b = half * (Frac(0) - i + ip + k + kp);
    out.has_r = true;
    out.r = Vertex{static_cast<int>(a.num), static_cast<int>((b * Frac(2)).num)};
  }
  return out;
}

// --- Reineke maximum by scanning every subset of Omega

inline long long reineke_subsets(const etsys::HeightFunction& xi, const std::vector<Vertex>& om,
                                 const std::map<Vertex, long long>& c) {
  auto get = [&](Vertex v) {
    auto it = c.find(v);
    return it == c.end() ? 0LL : it->second;
  };
  const std::size_t m = om.size();
  // covering arrows inside omega
  std::vector<std::vector<int>> preds(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (etsys::has_arrow(xi, om[b], om[a])) preds[a].push_back(static_cast<int>(b));
  long long best = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    bool closed = true;
    long long sum = 0;
    for (std::size_t a = 0; a < m && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b : preds[a])
        if (!(mask >> b & 1)) closed = false;
      sum += get(om[a]) - get({om[a].i, om[a].k2 - 4});
    }
    if (closed && sum > best) best = sum;
  }
  return best;
}

}  // namespace oracle
