#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "etsys/quiver.hpp"
#include "etsys/roots.hpp"

namespace etsys {

// A reduced word bound to its counts. Positions are 1-based, as in (i_1, ..., i_N).
class LusztigDatum {
 public:
  LusztigDatum(int n, std::vector<int> word, std::vector<long long> counts);

  int n() const { return n_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<long long>& counts() const { return counts_; }
  std::size_t size() const { return word_.size(); }

  // sum_r counts[r] * beta_r, as coefficients on simple roots
  std::vector<long long> weight() const;

  bool operator==(const LusztigDatum&) const = default;

 private:
  struct Unchecked {};
  LusztigDatum(Unchecked, int n, std::vector<int> word, std::vector<long long> counts);

  int n_;
  std::vector<int> word_;
  std::vector<long long> counts_;

  friend LusztigDatum two_move(const LusztigDatum&, int);
  friend LusztigDatum apply_three_move(const LusztigDatum&, int);
  friend LusztigDatum star_datum(const LusztigDatum&);
};

// swaps positions r and r+1; throws NotCommuting
LusztigDatum two_move(const LusztigDatum& d, int r);

std::array<long long, 3> three_move(long long a, long long b, long long c);

// (i,j,i) at r-1, r, r+1 becomes (j,i,j); throws NotBraidPattern
LusztigDatum apply_three_move(const LusztigDatum& d, int r);

LusztigDatum star_datum(const LusztigDatum& d);

// Vertex sets carrying data: the chain V<j> (j in [n0, n+1]) and the canonical windows Gamma^(delta).
struct Carrier {
  enum class Kind { Chain, Canonical };
  Kind kind = Kind::Chain;
  int n = 1;
  int index = 0;  // j for Chain, delta for Canonical

  static Carrier chain(int n0, int j);
  static Carrier gamma_Theta(int n0) { return chain(n0, n0); }
  static Carrier gamma_theta(int n0) { return chain(n0, 2 * n0); }
  static Carrier canonical(int n, int delta);

  int n0() const { return (n + 1) / 2; }
  std::string name() const;
  bool operator==(const Carrier&) const = default;
};

// In reading order; size is always n(n+1)/2.
std::vector<Vertex> carrier_vertices(const Carrier& c);
// word i<j> read off the carrier by ascending k
std::vector<int> carrier_word(const Carrier& c);
Carrier parse_carrier(const std::string& name, int n);

class VertexDatum {
 public:
  // Missing keys are zero; foreign keys throw WrongCarrier.
  VertexDatum(Carrier carrier, const std::map<Vertex, long long>& counts = {});
  static VertexDatum from_points(Carrier carrier, const Points& p);

  const Carrier& carrier() const { return carrier_; }
  const std::map<Vertex, long long>& counts() const { return counts_; }
  // 0 outside the carrier
  long long get(const Vertex& v) const;
  long long total() const;
  LusztigDatum as_lusztig() const;

  bool operator==(const VertexDatum&) const = default;

 private:
  Carrier carrier_;
  std::map<Vertex, long long> counts_;
};

std::string to_string(const VertexDatum& d);

// order of the r-indexed triples inside one step; they are disjoint
enum class TripleOrder { Ascending, Descending };

VertexDatum rho_step(int j, const VertexDatum& d, TripleOrder order = TripleOrder::Ascending);
VertexDatum rho(const VertexDatum& d);

}  // namespace etsys
