#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftlab/graph.hpp"

namespace liftlab {

// Number of edges with exactly one endpoint in s. s must be a proper
// nonempty subset of the vertices.
int edge_boundary(const Graph& g, const std::vector<int>& s);

// Sampled expansion estimate: minimum of |boundary(S)|/|S| over `samples`
// uniform k-subsets. An upper bound on the true size-k expansion, used
// comparatively; deterministic per seed.
double cheeger_estimate(const Graph& g, int k, int samples, std::uint64_t seed);

struct ExpansionReport {
    std::string graph_id;
    int vertices = 0;
    int degree = 0;
    double h_estimate = 0.0;
    double h_over_d = 0.0;
    double gap = 0.0;
    int k = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

// Base-and-lift expansion measurements with the amplification ratio
// h(lift)/h(base). lambda2 columns support the random-regular table.
struct AmplificationPair {
    ExpansionReport base;
    ExpansionReport lift;
    double amplification = 0.0;
    double lambda2_base = 0.0;
    double lambda2_lift = 0.0;
};

AmplificationPair paley_amplification(int p, std::uint64_t seed, int k = 5, int samples = 100);
AmplificationPair rrg_amplification(int n, int d, std::uint64_t seed, int k = 5, int samples = 100);

struct GapStudyCell {
    int d = 0;
    int n = 0;
    int trial = 0;
    double gap_base = 0.0;
    double gamma_ordered = 0.0;
    double gamma_symmetric = 0.0;
    double lambda1_ordered = 0.0;
    double lambda1_symmetric = 0.0;
};

struct GapStudyRow {
    int d = 0;
    int trials = 0;
    double avg_gamma_ordered = 0.0;
    double avg_gamma_symmetric = 0.0;
    double ordered_to_symmetric = 0.0;
    double avg_lambda1_ordered = 0.0;
    double max_lambda1_symmetric_error = 0.0;  // vs the exact value 2d-2
    std::vector<GapStudyCell> cells;
};

// Spectral-gap ratio study over random regular graphs: for each degree,
// trials_per_cell independent graphs per size, a fresh uniform labeling per
// ordered lift. Trials draw from split streams keyed by (d, n, trial), so
// results do not depend on evaluation order. Disconnected bases (zero gap)
// are resampled from follow-on streams.
std::vector<GapStudyRow> gap_study(const std::vector<int>& ds, const std::vector<int>& ns,
                                   int trials_per_cell, std::uint64_t seed);

struct FriedmanReport {
    int degree = 0;
    double lift_gap = 0.0;
    double bound = 0.0;  // d - 2*sqrt(d-1)
    double slack = 0.0;
    double lift_cheeger = 0.0;
    bool gap_ok = false;      // lift_gap >= bound - slack
    bool cheeger_ok = false;  // lift_cheeger >= lift_gap/2 - slack
};

// Evaluates the spectral-gap and Cheeger lower bounds on the symmetric
// lift of a regular base. Informational: failures are reported, not fatal.
FriedmanReport friedman_gap_check(const Graph& g, std::uint64_t seed, double slack = 0.25);

}  // namespace liftlab
