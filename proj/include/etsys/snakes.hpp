#pragma once

#include <random>
#include <vector>

#include "etsys/quiver.hpp"

namespace etsys {

bool in_snake_position(const HeightFunction& xi, const Vertex& v, const Vertex& w);
bool in_prime_snake_position(const HeightFunction& xi, const Vertex& v, const Vertex& w);

bool is_snake(const HeightFunction& xi, const Points& p);
bool is_prime_snake(const HeightFunction& xi, const Points& p);

// Untwisted: at most one point in each part. Twisted: q has at most one, r at most two.
struct QRPair {
  Points q;
  Points r;
};

QRPair qr_untwisted(const HeightFunction& xi, const Vertex& v, const Vertex& w);
QRPair qr_twisted(const HeightFunction& xi, const Vertex& v, const Vertex& w);
QRPair qr_pair(const HeightFunction& xi, const Vertex& v, const Vertex& w);

// concatenation over consecutive pairs; throws NotPrimeSnake / TooShort
QRPair qr_sequences(const HeightFunction& xi, const Points& p);

// P in Gamma^Theta (n = 2 n0 - 1) to P-dagger in Gamma^theta
Points translate_twisted(int n0, const Points& p);

std::vector<Points> split_prime(const HeightFunction& xi, const Points& p);

// Twisted k2 shift taking the quiver of xi onto the quiver of Theta(n0); 0 when untwisted.
int theta_shift2(const HeightFunction& xi);

// Forward growth inside k2 in [k2_lo, k2_hi]. Stops early when nothing fits.
Points random_snake(const HeightFunction& xi, std::mt19937_64& rng, int length, bool prime, int k2_lo, int k2_hi);
// same, restricted to Gamma^xi
Points random_window_snake(const HeightFunction& xi, std::mt19937_64& rng, int length, bool prime);
// a prime pair whose Q or R part is empty, when one exists near v
bool random_boundary_pair(const HeightFunction& xi, std::mt19937_64& rng, const Vertex& v, bool empty_q, Vertex& w);

// random valid height function; twisted needs odd n >= 3
HeightFunction random_height(Flavor f, int n, std::mt19937_64& rng);

// all vertices with k2 in [k2_lo, k2_hi]
std::vector<Vertex> vertices_between(const HeightFunction& xi, int k2_lo, int k2_hi);

}  // namespace etsys
