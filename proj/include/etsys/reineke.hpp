#pragma once

#include <vector>

#include "etsys/lusztig.hpp"
#include "etsys/quiver.hpp"

namespace etsys {

// Omega_j inside Gamma^(bar j), reading order.
std::vector<Vertex> omega(int n, int j);
// same set through phi^{-1}{alpha_{a,l} : a <= j <= l}
std::vector<Vertex> omega_by_roots(int n, int j);

// weight w(i,k) = c_{i,k} - c_{i,k-2}
long long closure_weight(const VertexDatum& c, const Vertex& v);

// max over lower closed subsets of Omega_j; c must sit on Gamma^(bar j). Min-cut.
long long epsilon(int j, const VertexDatum& c);
// same maximum by enumerating every lower closed subset
long long epsilon_bruteforce(int j, const VertexDatum& c);
// c on Gamma^(delta) with delta != bar j: c_{j,0}
long long epsilon_other_parity(int j, const VertexDatum& c);
// dispatches on the carrier parity
long long epsilon_any(int j, const VertexDatum& c);

// c^vee_{(i,k)} = c_{(i*, n-k)}, carried by Gamma^(1-delta)
VertexDatum dual_datum(const VertexDatum& c);
long long epsilon_star(int j, const VertexDatum& c);

}  // namespace etsys
