#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etsys/quiver.hpp"
#include "etsys/snakes.hpp"

namespace etsys {

enum class Tfd { Zero, One, Indeterminate };

const char* to_string(Tfd t);

// tfd(S_v, S(P)) from the case lemmas; needs v < P_1 and P prime.
// rule receives the case letter that fired: a-b untwisted, a-c twisted.
Tfd predicted_tfd_left(const HeightFunction& xi, const Vertex& v, const Points& p, char* rule = nullptr);
// tfd(S(P), S_v); needs P_p < v and P prime. Letters c-d untwisted, d-f twisted.
Tfd predicted_tfd_right(const HeightFunction& xi, const Points& p, const Vertex& v, char* rule = nullptr);

// The same quantities through epsilon on normalized data.
// nullopt when the normalization leaves the canonical window.
std::optional<long long> tfd_left_by_epsilon(const HeightFunction& xi, const Vertex& v, const Points& p);
std::optional<long long> tfd_right_by_epsilon(const HeightFunction& xi, const Points& p, const Vertex& v);

namespace detail {
// one twisted normalization; flip applies D to probe and snake first
std::optional<long long> twisted_left_route(const HeightFunction& xi, const Vertex& v, const Points& p, bool flip);
std::optional<long long> twisted_right_route(const HeightFunction& xi, const Points& p, const Vertex& v, bool flip);
}  // namespace detail

struct HypothesisCheck {
  int a = 0;  // 1-based slice ends
  int b = 0;
  bool left = true;
  Tfd predicted = Tfd::Indeterminate;
  std::optional<long long> by_epsilon;
  std::optional<long long> value;
  bool contradiction = false;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;
  bool all_one = true;
  bool contradiction = false;
};

HypothesisReport check_theoremA_hypotheses(const HeightFunction& xi, const Points& p);

struct Flags {
  bool real = true;
  bool prime = true;
};

Flags flags(const HeightFunction& xi, const Points& p);

struct TSystemRelation {
  HeightFunction xi = HeightFunction::canonical(1, 0);
  Points p;
  Points b;  // P[1, p-1]
  Points c;  // P[2, p]
  Points a;  // P
  Points d;  // P[2, p-1], empty means the unit
  Points q;
  Points r;
  Flags flags;
  bool hypotheses_ok = false;
  // Q and R strongly commute; recorded, not checked
  bool qr_strongly_commuting = true;
};

TSystemRelation extended_tsystem(const HeightFunction& xi, const Points& p);

std::string to_latex(const TSystemRelation& rel);
std::string to_text(const TSystemRelation& rel);

}  // namespace etsys
