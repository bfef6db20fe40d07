#include "liftlab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "liftlab/families.hpp"
#include "liftlab/lifts.hpp"
#include "liftlab/spectral.hpp"

namespace liftlab {

int edge_boundary(const Graph& g, const std::vector<int>& s) {
    const int n = g.vertex_count();
    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    int size = 0;
    for (int v : s) {
        if (v < 0 || v >= n) throw BadSet("subset vertex out of range");
        if (!inside[static_cast<std::size_t>(v)]) {
            inside[static_cast<std::size_t>(v)] = 1;
            ++size;
        }
    }
    if (size == 0 || size == n) throw BadSet("subset must be proper and nonempty");

    int crossing = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (!inside[static_cast<std::size_t>(w)]) ++crossing;
    return crossing;
}

double cheeger_estimate(const Graph& g, int k, int samples, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (k < 1 || k >= n) throw BadSize("cheeger estimate needs 1 <= k < |V|");
    if (samples < 1) throw BadSize("cheeger estimate needs at least one sample");

    Rng rng(seed);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const auto subset = rng.sample_without_replacement(n, k);
        const double ratio = static_cast<double>(edge_boundary(g, subset)) / static_cast<double>(k);
        best = std::min(best, ratio);
    }
    return best;
}

namespace {

ExpansionReport measure(const std::string& id, const Graph& g, int k, int samples, std::uint64_t seed) {
    ExpansionReport r;
    r.graph_id = id;
    r.vertices = g.vertex_count();
    int d = 0;
    g.is_regular(&d);
    r.degree = d;
    r.h_estimate = cheeger_estimate(g, k, samples, seed);
    r.h_over_d = d > 0 ? r.h_estimate / d : 0.0;
    r.gap = spectral_gap(g);
    r.k = k;
    r.samples = samples;
    r.seed = seed;
    return r;
}

AmplificationPair amplify(const std::string& base_id, const Graph& base, int k, int samples,
                          std::uint64_t seed) {
    Rng rng(seed);
    AmplificationPair pair;
    pair.base = measure(base_id, base, k, samples, rng.split(1).next_u64());
    const Graph lift = hl2_sym(base).graph;
    pair.lift = measure(base_id + "-lift", lift, k, samples, rng.split(2).next_u64());
    pair.amplification = pair.base.h_estimate > 0 ? pair.lift.h_estimate / pair.base.h_estimate
                                                  : std::numeric_limits<double>::quiet_NaN();
    pair.lambda2_base = adjacency_spectrum(base)[1];
    pair.lambda2_lift = adjacency_spectrum(lift)[1];
    return pair;
}

}  // namespace

AmplificationPair paley_amplification(int p, std::uint64_t seed, int k, int samples) {
    return amplify("paley(" + std::to_string(p) + ")", paley(p), k, samples, seed);
}

AmplificationPair rrg_amplification(int n, int d, std::uint64_t seed, int k, int samples) {
    const Graph base = random_regular(n, d, Rng(seed).split(0).next_u64());
    return amplify("rrg(" + std::to_string(n) + "," + std::to_string(d) + ")", base, k, samples, seed);
}

std::vector<GapStudyRow> gap_study(const std::vector<int>& ds, const std::vector<int>& ns,
                                   int trials_per_cell, std::uint64_t seed) {
    const Rng root(seed);
    std::vector<GapStudyRow> rows;
    for (std::size_t di = 0; di < ds.size(); ++di) {
        const int d = ds[di];
        GapStudyRow row;
        row.d = d;
        double sum_ord = 0.0, sum_sym = 0.0, sum_l1_ord = 0.0;
        for (std::size_t ni = 0; ni < ns.size(); ++ni) {
            const int n = ns[ni];
            if ((static_cast<long long>(n) * d) % 2 != 0)
                throw BadParity("gap study cell has odd n*d");
            for (int trial = 0; trial < trials_per_cell; ++trial) {
                Rng cell = root.split((di * 1000 + ni) * 1000 + static_cast<std::uint64_t>(trial));

                // Resample until the base is connected; a zero base gap
                // leaves the ratio undefined.
                Graph base;
                double gap_base = 0.0;
                for (std::uint64_t attempt = 0;; ++attempt) {
                    base = random_regular(n, d, cell.split(10 + attempt).next_u64());
                    if (connected_components(base).size() != 1) continue;
                    gap_base = spectral_gap(base);
                    if (gap_base > 1e-9) break;
                }

                Rng lab_rng = cell.split(3);
                const Labeling lab = Labeling::random_labeling(n, lab_rng);
                const Spectrum sym = adjacency_spectrum(hl2_sym(base).graph);
                const Spectrum ord = adjacency_spectrum(hl2(base, lab).graph);

                GapStudyCell entry;
                entry.d = d;
                entry.n = n;
                entry.trial = trial;
                entry.gap_base = gap_base;
                entry.gamma_symmetric = spectral_gap(sym) / gap_base;
                entry.gamma_ordered = spectral_gap(ord) / gap_base;
                entry.lambda1_symmetric = sym[0];
                entry.lambda1_ordered = ord[0];
                row.cells.push_back(entry);

                sum_sym += entry.gamma_symmetric;
                sum_ord += entry.gamma_ordered;
                sum_l1_ord += entry.lambda1_ordered;
                row.max_lambda1_symmetric_error =
                    std::max(row.max_lambda1_symmetric_error,
                             std::abs(entry.lambda1_symmetric - (2.0 * d - 2.0)));
                ++row.trials;
            }
        }
        row.avg_gamma_ordered = sum_ord / row.trials;
        row.avg_gamma_symmetric = sum_sym / row.trials;
        row.ordered_to_symmetric = row.avg_gamma_ordered / row.avg_gamma_symmetric;
        row.avg_lambda1_ordered = sum_l1_ord / row.trials;
        rows.push_back(std::move(row));
    }
    return rows;
}

FriedmanReport friedman_gap_check(const Graph& g, std::uint64_t seed, double slack) {
    int d = 0;
    if (!g.is_regular(&d)) throw NotRegular("gap bound applies to regular bases");

    const Graph lift = hl2_sym(g).graph;
    FriedmanReport report;
    report.degree = d;
    report.lift_gap = spectral_gap(lift);
    report.bound = d - 2.0 * std::sqrt(static_cast<double>(d) - 1.0);
    report.slack = slack;
    report.lift_cheeger = cheeger_estimate(lift, 5, 100, seed);
    report.gap_ok = report.lift_gap >= report.bound - slack;
    report.cheeger_ok = report.lift_cheeger >= report.lift_gap / 2.0 - slack;
    return report;
}

}  // namespace liftlab
