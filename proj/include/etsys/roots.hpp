#pragma once

#include <compare>
#include <string>
#include <vector>

namespace etsys {

// Interval root alpha_{lo,hi} = alpha_lo + ... + alpha_hi, possibly negated.
struct Root {
  int lo = 1;
  int hi = 1;
  bool positive = true;

  auto operator<=>(const Root&) const = default;
};

std::string to_string(const Root& r);

// Type A_n root system. Every operation checks its inputs against n.
class RootSystem {
 public:
  explicit RootSystem(int n);

  int rank() const { return n_; }
  int num_positive() const { return n_ * (n_ + 1) / 2; }

  int star(int i) const;
  Root simple(int i) const;
  Root reflect(int i, const Root& r) const;

  // beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); throws NotReduced.
  std::vector<Root> inversion_sequence(const std::vector<int>& word) const;
  bool is_reduced(const std::vector<int>& word) const;
  bool is_longest_word(const std::vector<int>& word) const;

  std::vector<Root> positive_roots() const;

  void check_node(int i) const;
  void check_root(const Root& r) const;

 private:
  int n_;
};

}  // namespace etsys
