#include "etsys/snakes.hpp"

#include <algorithm>

#include "etsys/error.hpp"
#include "etsys/lusztig.hpp"

namespace etsys {

namespace {

bool region_ok(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (!xi.twisted()) return true;
  Region a = region(xi, v), b = region(xi, w);
  if (a == Region::Lt || a == Region::U) return b == Region::Lt || b == Region::D;
  return b == Region::Gt || b == Region::U;
}

Vertex next_in_row(const HeightFunction& xi, const Vertex& v) {
  int step = (xi.twisted() && v.i == xi.n0()) ? 2 : 4;
  return Vertex{v.i, v.k2 + step};
}

// 2 * Theta_i
int T2(int n0, int i) {
  if (i < n0) return 2 * i;
  if (i == n0) return 2 * n0 - 1;
  return 2 * (i - 1);
}

int exact_div(int a, int b) {
  if (a % b != 0) throw Error(ErrorKind::InvalidArgument, "non-integral coordinate in a position formula");
  return a / b;
}

// Theta coordinates, v in Lt or U
QRPair qr_theta_lower(int n0, const Vertex& v, const Vertex& w) {
  QRPair out;
  const int i = v.i, k2 = v.k2, ip = w.i, kp2 = w.k2;
  const int ti = T2(n0, i), tip = T2(n0, ip);
  if (kp2 - k2 != ti + tip)
    out.q.push_back(Vertex{exact_div(ti + tip + k2 - kp2, 4), exact_div(ti - tip + k2 + kp2, 2)});
  if (i < n0 && ip < n0) {
    if (kp2 - k2 < 2 * (2 * n0 - i - ip)) {
      out.r.push_back(Vertex{exact_div(2 * (i + ip) - k2 + kp2, 4), exact_div(2 * (ip - i) + k2 + kp2, 2)});
    } else {
      out.r.push_back(Vertex{n0, 2 * (n0 - i) + k2 - 1});
      out.r.push_back(Vertex{n0, 2 * (ip - n0) + kp2 + 1});
    }
  } else if (i < n0 && ip == n0) {
    out.r.push_back(Vertex{n0, 2 * (n0 - i) + k2 - 1});
  } else if (i == n0 && ip < n0) {
    out.r.push_back(Vertex{n0, 2 * (ip - n0) + kp2 + 1});
  }
  return out;
}

void check_members(const HeightFunction& xi, const QRPair& qr) {
  for (const Points* part : {&qr.q, &qr.r})
    for (const Vertex& u : *part)
      if (!is_vertex(xi, u)) throw Error(ErrorKind::InvalidArgument, "position formula left the quiver at " + to_string(u));
}

}  // namespace

bool in_snake_position(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (!is_vertex(xi, v) || !is_vertex(xi, w)) return false;
  return preceq(xi, next_in_row(xi, v), w) && region_ok(xi, v, w);
}

bool in_prime_snake_position(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  return in_snake_position(xi, v, w) && preceq(xi, w, dualize_vertex(xi, v, -1));
}

bool is_snake(const HeightFunction& xi, const Points& p) {
  if (p.empty()) return false;
  if (!is_vertex(xi, p[0])) return false;
  for (std::size_t s = 0; s + 1 < p.size(); ++s)
    if (!in_snake_position(xi, p[s], p[s + 1])) return false;
  return true;
}

bool is_prime_snake(const HeightFunction& xi, const Points& p) {
  if (p.empty() || !is_vertex(xi, p[0])) return false;
  for (std::size_t s = 0; s + 1 < p.size(); ++s)
    if (!in_prime_snake_position(xi, p[s], p[s + 1])) return false;
  return true;
}

QRPair qr_untwisted(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (xi.twisted()) throw Error(ErrorKind::InvalidArgument, "qr_untwisted needs an untwisted height function");
  if (!in_prime_snake_position(xi, v, w))
    throw Error(ErrorKind::NotPrimeSnakePair, to_string(w) + " is not in prime snake position w.r.t. " + to_string(v));
  const int n = xi.n(), i = v.i, k2 = v.k2, ip = w.i, kp2 = w.k2;
  QRPair out;
  if (kp2 - k2 != 2 * (i + ip))
    out.q.push_back(Vertex{exact_div(2 * (i + ip) + k2 - kp2, 4), exact_div(2 * (i - ip) + k2 + kp2, 2)});
  if (kp2 - k2 != 2 * (2 * n + 2 - i - ip))
    out.r.push_back(Vertex{exact_div(2 * (i + ip) - k2 + kp2, 4), exact_div(2 * (ip - i) + k2 + kp2, 2)});
  check_members(xi, out);
  return out;
}

int theta_shift2(const HeightFunction& xi) { return xi.twisted() ? 2 - xi.xi2(1) : 0; }

QRPair qr_twisted(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  if (!xi.twisted()) throw Error(ErrorKind::InvalidArgument, "qr_twisted needs a twisted height function");
  if (!in_prime_snake_position(xi, v, w))
    throw Error(ErrorKind::NotPrimeSnakePair, to_string(w) + " is not in prime snake position w.r.t. " + to_string(v));
  const int n0 = xi.n0(), t2 = theta_shift2(xi);
  auto Th = HeightFunction::Theta(n0);
  Vertex a{v.i, v.k2 + t2}, b{w.i, w.k2 + t2};
  QRPair out;
  Region rg = region(Th, a);
  if (rg == Region::Lt || rg == Region::U) {
    out = qr_theta_lower(n0, a, b);
  } else {
    QRPair low = qr_theta_lower(n0, dualize_vertex(Th, a, 1), dualize_vertex(Th, b, 1));
    out.q = dualize(Th, low.r, -1);
    out.r = dualize(Th, low.q, -1);
  }
  out.q = shift(out.q, -t2);
  out.r = shift(out.r, -t2);
  check_members(xi, out);
  return out;
}

QRPair qr_pair(const HeightFunction& xi, const Vertex& v, const Vertex& w) {
  return xi.twisted() ? qr_twisted(xi, v, w) : qr_untwisted(xi, v, w);
}

QRPair qr_sequences(const HeightFunction& xi, const Points& p) {
  if (p.size() < 2) throw Error(ErrorKind::TooShort, "Q/R sequences need at least two points");
  if (!is_prime_snake(xi, p)) throw Error(ErrorKind::NotPrimeSnake, to_string(p) + " is not a prime snake");
  QRPair out;
  for (std::size_t s = 0; s + 1 < p.size(); ++s) {
    QRPair part = qr_pair(xi, p[s], p[s + 1]);
    out.q.insert(out.q.end(), part.q.begin(), part.q.end());
    out.r.insert(out.r.end(), part.r.begin(), part.r.end());
  }
  return out;
}

Points translate_twisted(int n0, const Points& p) {
  auto Th = HeightFunction::Theta(n0);
  const int n = Th.n();
  for (const Vertex& v : p)
    if (!in_window(Th, v)) throw Error(ErrorKind::NotInWindow, to_string(v) + " is not in Gamma^Theta");
  if (!p.empty() && !is_snake(Th, p)) throw Error(ErrorKind::NotSnake, to_string(p) + " is not a snake");

  auto x_minus = [&](const Vertex& v, Points& out) {
    if (region(Th, v) == Region::D) return;
    int t = T2(n0, v.i);
    out.push_back(Vertex{exact_div(t + v.k2 + 4, 4), exact_div(t + v.k2 - 4, 2)});
  };
  auto x_plus = [&](const Vertex& v, Points& out) {
    if (region(Th, v) == Region::U) return;
    int t = T2(n0, v.i);
    out.push_back(Vertex{exact_div(t - v.k2 + 4 * n, 4), exact_div(-t + v.k2 + 4 * n, 2)});
  };
  auto x_mid = [&](const Vertex& v, const Vertex& w, Points& out) {
    if (region(Th, v) == Region::U) return;
    int t = T2(n0, v.i), tw = T2(n0, w.i);
    out.push_back(Vertex{exact_div(t + tw - v.k2 + w.k2, 4), exact_div(-t + tw + v.k2 + w.k2, 2)});
  };

  Points out;
  std::size_t s = 0;
  while (s < p.size()) {
    if (region(Th, p[s]) == Region::Lt) {
      out.push_back(p[s++]);
      continue;
    }
    std::size_t e = s;
    while (e + 1 < p.size() && region(Th, p[e + 1]) != Region::Lt) ++e;
    x_minus(p[s], out);
    for (std::size_t a = s; a < e; ++a) x_mid(p[a], p[a + 1], out);
    x_plus(p[e], out);
    s = e + 1;
  }

#ifndef NDEBUG
  if (rho(VertexDatum::from_points(Carrier::gamma_Theta(n0), p)) != VertexDatum::from_points(Carrier::gamma_theta(n0), out))
    throw Error(ErrorKind::InvalidArgument, "translation disagrees with rho on " + to_string(p));
#endif
  return out;
}

std::vector<Points> split_prime(const HeightFunction& xi, const Points& p) {
  std::vector<Points> out;
  if (p.empty()) return out;
  out.push_back({p[0]});
  for (std::size_t s = 0; s + 1 < p.size(); ++s) {
    if (!in_prime_snake_position(xi, p[s], p[s + 1])) out.emplace_back();
    out.back().push_back(p[s + 1]);
  }
  return out;
}

std::vector<Vertex> vertices_between(const HeightFunction& xi, int k2_lo, int k2_hi) {
  std::vector<Vertex> out;
  for (int k2 = k2_lo; k2 <= k2_hi; ++k2)
    for (int i = 1; i <= xi.n(); ++i)
      if (is_vertex(xi, Vertex{i, k2})) out.push_back(Vertex{i, k2});
  return out;
}

HeightFunction random_height(Flavor f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> start(-3, 3), coin(0, 1);
  std::vector<int> v(n, 0);
  if (f == Flavor::Untwisted) {
    v[0] = 2 * start(rng);
    for (int i = 1; i < n; ++i) v[i] = v[i - 1] + (coin(rng) ? 2 : -2);
    return HeightFunction::untwisted(v);
  }
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "twisted height functions need odd n >= 3");
  const int n0 = (n + 1) / 2;
  int prev = 2 * start(rng);
  for (int i = 1; i <= n; ++i) {
    if (i == n0) continue;
    if (i == 1) {
      v[0] = prev;
      continue;
    }
    prev += coin(rng) ? 2 : -2;
    v[i - 1] = prev;
  }
  int low = v[n0 - 2];
  if (n0 < n) low = std::min(low, v[n0]);
  v[n0 - 1] = low + (coin(rng) ? 1 : -1);
  return HeightFunction::twisted(n0, v);
}

namespace {

template <class Pred>
Points grow(const HeightFunction& xi, std::mt19937_64& rng, int length, bool prime, const std::vector<Vertex>& pool,
            Pred allowed) {
  Points p;
  if (pool.empty() || length < 1) return p;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  p.push_back(pool[pick(rng)]);
  while (static_cast<int>(p.size()) < length) {
    std::vector<Vertex> next;
    for (const Vertex& w : pool) {
      if (!allowed(w)) continue;
      bool ok = prime ? in_prime_snake_position(xi, p.back(), w) : in_snake_position(xi, p.back(), w);
      if (ok) next.push_back(w);
    }
    if (next.empty()) break;
    std::uniform_int_distribution<std::size_t> q(0, next.size() - 1);
    p.push_back(next[q(rng)]);
  }
  return p;
}

}  // namespace

Points random_snake(const HeightFunction& xi, std::mt19937_64& rng, int length, bool prime, int k2_lo, int k2_hi) {
  auto pool = vertices_between(xi, k2_lo, k2_hi);
  return grow(xi, rng, length, prime, pool, [](const Vertex&) { return true; });
}

Points random_window_snake(const HeightFunction& xi, std::mt19937_64& rng, int length, bool prime) {
  auto pool = gamma_window(xi);
  return grow(xi, rng, length, prime, pool, [](const Vertex&) { return true; });
}

bool random_boundary_pair(const HeightFunction& xi, std::mt19937_64& rng, const Vertex& v, bool empty_q, Vertex& w) {
  std::vector<Vertex> hits;
  for (const Vertex& u : vertices_between(xi, v.k2, v.k2 + 4 * xi.ntilde())) {
    if (!in_prime_snake_position(xi, v, u)) continue;
    QRPair qr = qr_pair(xi, v, u);
    if ((empty_q ? qr.q : qr.r).empty()) hits.push_back(u);
  }
  if (hits.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
  w = hits[pick(rng)];
  return true;
}

}  // namespace etsys
