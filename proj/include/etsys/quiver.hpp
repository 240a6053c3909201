#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "etsys/roots.hpp"

namespace etsys {

enum class Flavor { Untwisted, Twisted };

const char* to_string(Flavor f);

// A point (i, k) of a repetition quiver. k is a half-integer kept as k2 = 2k.
struct Vertex {
  int i = 1;
  int k2 = 0;

  auto operator<=>(const Vertex&) const = default;
};

using Points = std::vector<Vertex>;

// "3", "-1/2", "17/2"
std::string format_k2(int k2);
std::string to_string(const Vertex& v);
std::string to_string(const Points& p);

// Reading order: ascending k, then ascending i.
bool reading_less(const Vertex& a, const Vertex& b);

enum class Region { Lt, Gt, U, D };

const char* to_string(Region r);

class HeightFunction {
 public:
  // Values are doubled. Throws InvalidHeight.
  static HeightFunction untwisted(std::vector<int> xi2);
  static HeightFunction twisted(int n0, std::vector<int> xi2);

  // xi^(delta)_i = (delta + i - 1) mod 2
  static HeightFunction canonical(int n, int delta);
  // the untwisted theta and twisted Theta attached to n = 2 n0 - 1
  static HeightFunction theta(int n0);
  static HeightFunction Theta(int n0);

  Flavor flavor() const { return flavor_; }
  bool twisted() const { return flavor_ == Flavor::Twisted; }
  int n() const { return static_cast<int>(xi2_.size()); }
  int n0() const { return n0_; }
  int xi2(int i) const;
  const std::vector<int>& values2() const { return xi2_; }
  int d(int i) const;
  // n+1 untwisted, n twisted
  int ntilde() const;
  int star(int i) const { return n() + 1 - i; }
  RootSystem roots() const { return RootSystem(n()); }

  bool operator==(const HeightFunction&) const = default;

 private:
  HeightFunction(Flavor f, int n0, std::vector<int> xi2);
  void validate() const;

  Flavor flavor_ = Flavor::Untwisted;
  int n0_ = 0;
  std::vector<int> xi2_;
};

std::string to_string(const HeightFunction& xi);

bool is_vertex(const HeightFunction& xi, const Vertex& v);

std::vector<int> sinks(const HeightFunction& xi);
std::vector<int> sources(const HeightFunction& xi);
HeightFunction reflect_height(const HeightFunction& xi, int i);

bool has_arrow(const HeightFunction& xi, const Vertex& v, const Vertex& w);
std::vector<Vertex> successors(const HeightFunction& xi, const Vertex& v);

// Reachability along arrows, swept level by level up to w.k2.
bool preceq(const HeightFunction& xi, const Vertex& v, const Vertex& w);
bool prec(const HeightFunction& xi, const Vertex& v, const Vertex& w);

// All w with v <= w and w.k2 <= k2_max.
std::vector<Vertex> forward_cone(const HeightFunction& xi, const Vertex& v, int k2_max);

// Gamma^xi in reading order.
std::vector<Vertex> gamma_window(const HeightFunction& xi);
bool in_window(const HeightFunction& xi, const Vertex& v);

struct Reading {
  std::vector<Vertex> vertices;
  std::vector<int> word;
};

Reading compatible_reading(const HeightFunction& xi);

Root phi(const HeightFunction& xi, const Vertex& v);
std::map<Vertex, Root> phi_map(const HeightFunction& xi);
// Closed form valid for the canonical functions xi^(delta).
Root phi_closed_form(int n, const Vertex& v);

// (i*, k - sign * ntilde); sign = +1 is D, sign = -1 is D^{-1}.
Vertex dualize_vertex(const HeightFunction& xi, const Vertex& v, int sign = 1);
Points dualize(const HeightFunction& xi, const Points& p, int sign = 1);
Points shift(const Points& p, int dk2);

Region region(const HeightFunction& xi, const Vertex& v);

std::string quiver_dot(const HeightFunction& xi, int k2_min, int k2_max);
std::string gamma_dot(const HeightFunction& xi);
std::string gamma_text(const HeightFunction& xi);

}  // namespace etsys
