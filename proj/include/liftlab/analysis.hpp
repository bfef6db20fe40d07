#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "liftlab/graph.hpp"
#include "liftlab/lifts.hpp"

namespace liftlab {

constexpr long long kDefaultSearchBudget = 10'000'000;

struct ClawWitness {
    int center = -1;
    std::array<int, 3> leaves{};
};

// Exhaustive scan over centers and neighbor triples.
std::optional<ClawWitness> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

// Induced odd cycle with length in [5, max_len], found by induced-path
// extension with chord pruning. Absence is guaranteed only up to max_len.
// Throws BudgetExceeded when the node-expansion cap is hit.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len,
                                              long long budget = kDefaultSearchBudget);

// Exact maximum clique, branch and bound with a greedy-coloring bound.
int clique_number(const Graph& g, long long budget = kDefaultSearchBudget);

// Exact chromatic number: clique lower bound, then k-colorability searches.
int chromatic_number(const Graph& g, long long budget = kDefaultSearchBudget);

struct SurrogateViolation {
    std::vector<int> vertices;
    int chromatic = 0;
    int clique = 0;
};

struct SurrogateReport {
    int samples_checked = 0;
    std::optional<SurrogateViolation> violation;

    bool clean() const { return !violation.has_value(); }
};

// chi = omega spot checks on random induced subgraphs of size
// 4..min(|V|,18). A violation disproves perfection.
SurrogateReport perfect_surrogate(const Graph& g, int samples, std::uint64_t seed,
                                  long long budget = kDefaultSearchBudget);

// True iff every cycle has positive sign product (signed two-coloring BFS).
bool is_balanced(const SignedAdjacency& m);

// Exact isomorphism test for graphs with at most 12 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

// Exact |Aut(G)| via orbit-stabilizer with color refinement. The default
// cap matches the isomorphism limit; callers reporting on larger instances
// may raise it.
long long automorphism_count(const Graph& g, int max_vertices = 12);

// Number of isomorphism classes among the ordered lifts over all n!
// labelings. Enumerates every labeling; |V| <= 5.
int count_ordered_lift_classes(const Graph& g);

}  // namespace liftlab
