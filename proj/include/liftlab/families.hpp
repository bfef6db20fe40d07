#pragma once

#include <cstdint>

#include "liftlab/graph.hpp"

namespace liftlab {

Graph complete(int n);

// Star with center vertex 0 and n leaves (n+1 vertices total).
Graph star(int n);

Graph path(int n);
Graph cycle(int n);

// Paley graph on the prime field F_p, p prime with p = 1 (mod 4):
// i ~ j iff (i - j) mod p is a nonzero quadratic residue. (p-1)/2-regular.
Graph paley(int p);

// Simple d-regular graph sampled by the pairing model: d stubs per vertex,
// uniform perfect matching of stubs, full resample on any loop or repeated
// edge. Deterministic for a fixed seed.
Graph random_regular(int n, int d, std::uint64_t seed, int max_resamples = 10000);

// Johnson graph J(n,k): k-subsets of {0..n-1} in lexicographic order,
// adjacent when the subsets intersect in k-1 elements.
Graph johnson(int n, int k);

// Triangular graph T(n) = J(n,2).
Graph triangular(int n);

}  // namespace liftlab
