#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etsys/quiver.hpp"
#include "etsys/tsystem.hpp"

namespace etsys {

// Laurent monomial in Y_{node, spectral}; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial Y(int node, int spectral, int exp = 1);

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  bool operator==(const Monomial&) const = default;

  bool is_unit() const { return f_.empty(); }
  bool dominant() const;
  const std::map<std::pair<int, int>, int>& factors() const { return f_; }

  // Y_{j,l} -> Y_{rank+1-j, l + sign*h_dual}
  Monomial dual_shift(int rank, int h_dual, int sign) const;

 private:
  std::map<std::pair<int, int>, int> f_;
};

// "Y_{1,3}Y_{1,1}^2", spectral descending; "1" for the unit
std::string to_string(const Monomial& m);
std::string to_latex(const Monomial& m);

class Realization {
 public:
  enum class Mode { QDatumA, QDatumB, Custom };

  static Realization qdatum_A();
  static Realization qdatum_B();
  // table keyed by Gamma^xi, complete; rank defaults to h_dual - 1
  static Realization custom(const HeightFunction& xi, int h_dual, std::map<Vertex, Monomial> table, int rank = 0);

  Mode mode() const { return mode_; }
  int h_dual() const { return h_dual_; }
  int rank() const { return rank_; }
  const std::map<Vertex, Monomial>& table() const { return table_; }
  const HeightFunction* xi() const { return xi_.empty() ? nullptr : &xi_.front(); }

 private:
  Mode mode_ = Mode::QDatumA;
  int h_dual_ = 0;
  int rank_ = 0;
  std::map<Vertex, Monomial> table_;
  std::vector<HeightFunction> xi_;  // custom mode only
};

const char* to_string(Realization::Mode m);

Monomial cuspidal_monomial(const Realization& re, const HeightFunction& xi, const Vertex& v);

struct SnakeMonomial {
  Monomial monomial;
  bool exact = true;
};

SnakeMonomial snake_monomial(const Realization& re, const HeightFunction& xi, const Points& p);

struct RelationMonomials {
  Monomial a, b, c, d, q, r;
  bool exact = true;
};

// throws InvalidArgument if m(B)m(C) != m(A)m(D)
RelationMonomials relation_monomials(const TSystemRelation& rel, const Realization& re);

std::string to_text(const RelationMonomials& m);
std::string to_latex(const RelationMonomials& m);

}  // namespace etsys
