#include "etsys/roots.hpp"

#include <set>

#include "etsys/error.hpp"

namespace etsys {

std::string to_string(const Root& r) {
  std::string s = r.positive ? "" : "-";
  s += "a";
  if (r.lo == r.hi) return s + std::to_string(r.lo);
  return s + std::to_string(r.lo) + "," + std::to_string(r.hi);
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
}

void RootSystem::check_node(int i) const {
  if (i < 1 || i > n_)
    throw Error(ErrorKind::RankMismatch,
                "node " + std::to_string(i) + " outside [1," + std::to_string(n_) + "]");
}

void RootSystem::check_root(const Root& r) const {
  if (r.lo > r.hi) throw Error(ErrorKind::InvalidArgument, "root with lo > hi");
  check_node(r.lo);
  check_node(r.hi);
}

int RootSystem::star(int i) const {
  check_node(i);
  return n_ + 1 - i;
}

Root RootSystem::simple(int i) const {
  check_node(i);
  return Root{i, i, true};
}

Root RootSystem::reflect(int i, const Root& r) const {
  check_node(i);
  check_root(r);
  // coefficient vector with zero padding at 0 and n+1
  std::vector<int> c(n_ + 2, 0);
  int sgn = r.positive ? 1 : -1;
  for (int j = r.lo; j <= r.hi; ++j) c[j] = sgn;
  c[i] -= 2 * c[i] - c[i - 1] - c[i + 1];

  int lo = 0, hi = 0, val = 0;
  for (int j = 1; j <= n_; ++j) {
    if (c[j] == 0) continue;
    if (lo == 0) {
      lo = j;
      val = c[j];
    } else if (hi != j - 1 || c[j] != val) {
      throw Error(ErrorKind::InvalidArgument, "reflection image is not a root");
    }
    hi = j;
  }
  if (lo == 0 || (val != 1 && val != -1))
    throw Error(ErrorKind::InvalidArgument, "reflection image is not a root");
  return Root{lo, hi, val > 0};
}

std::vector<Root> RootSystem::inversion_sequence(const std::vector<int>& word) const {
  std::vector<Root> out;
  out.reserve(word.size());
  std::set<Root> seen;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Root b = simple(word[k]);
    for (std::size_t m = k; m-- > 0;) b = reflect(word[m], b);
    if (!b.positive || !seen.insert(b).second)
      throw Error(ErrorKind::NotReduced, "word is not reduced at position " + std::to_string(k + 1));
    out.push_back(b);
  }
  return out;
}

bool RootSystem::is_reduced(const std::vector<int>& word) const {
  try {
    inversion_sequence(word);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotReduced) return false;
    throw;
  }
}

bool RootSystem::is_longest_word(const std::vector<int>& word) const {
  return static_cast<int>(word.size()) == num_positive() && is_reduced(word);
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (int lo = 1; lo <= n_; ++lo)
    for (int hi = lo; hi <= n_; ++hi) out.push_back(Root{lo, hi, true});
  return out;
}

}  // namespace etsys
