#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "etsys/lusztig.hpp"
#include "etsys/quiver.hpp"

namespace etsys {

struct CheckResult {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  std::string first_failure;
  std::map<std::string, long long> tally;

  void pass() { ++passed; }
  void fail(const std::string& what);
  bool ok() const { return failed == 0 && passed > 0; }
};

std::string to_string(const CheckResult& r);

VertexDatum random_datum(const Carrier& c, std::mt19937_64& rng, int max_count = 3);

// star_datum on the word, re-keyed onto Gamma^(1-delta) through the inversion roots, then epsilon
long long epsilon_star_via_words(int j, const VertexDatum& c);

CheckResult verify_move_walks(int walks, int steps, int max_n, std::uint64_t seed);
CheckResult verify_rho_translation(int n0, int snakes, std::uint64_t seed);
CheckResult verify_rho_order(int n0, int trials, std::uint64_t seed);
CheckResult verify_rho_weight(int n0, int trials, std::uint64_t seed);
CheckResult verify_chain_words(int n0);
CheckResult verify_phi_closed_form(int n);
CheckResult verify_omega(int n);
CheckResult verify_reineke_agreement(int n, int trials, std::uint64_t seed);
CheckResult verify_reineke_unit(int n);
CheckResult verify_epsilon_star(int n, int trials, std::uint64_t seed);
CheckResult verify_being_snake(Flavor f, int trials, std::uint64_t seed);
CheckResult verify_qr_equivariance(int n);
// determinate predictions against epsilon; stops after `target` comparable cases per side
CheckResult verify_predictions(Flavor f, int target, std::uint64_t seed);
CheckResult verify_hypotheses(Flavor f, int trials, std::uint64_t seed);

// suite in {moves, rho, reineke, qr, tfd, all}
std::vector<CheckResult> run_suite(const std::string& suite, int trials, std::uint64_t seed);

}  // namespace etsys
