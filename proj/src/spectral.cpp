#include "liftlab/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace liftlab {

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
    std::sort(values_.begin(), values_.end(), std::greater<double>());
}

std::vector<std::pair<double, int>> Spectrum::grouped() const {
    std::vector<std::pair<double, int>> out;
    for (double v : values_) {
        if (!out.empty() && std::abs(out.back().first - v) <= tol_)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

Spectrum eigenvalues(const DenseSymMatrix& m, double tol) {
    if (m.max_asymmetry() > 1e-12) throw NotSymmetric("matrix asymmetry exceeds 1e-12");
    const int n = m.dim();
    if (n == 0) return Spectrum({}, tol);

    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
        m.data().data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return Spectrum(std::move(vals), tol);
}

Spectrum adjacency_spectrum(const Graph& g, double tol) { return eigenvalues(adjacency_matrix(g), tol); }

Spectrum laplacian_spectrum(const Graph& g, double tol) { return eigenvalues(laplacian_matrix(g), tol); }

Spectrum predicted_lift_spectrum(const Spectrum& base, int d, int n) {
    if (static_cast<int>(base.size()) != n)
        throw BadSize("base spectrum has wrong length");
    if (d < 2) throw BadSize("lift spectrum formula needs degree >= 2");
    if (base.size() == 0 || std::abs(base[0] - static_cast<double>(d)) > 1e-9)
        throw NotRegular("top eigenvalue of the base must equal the degree");

    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (double lambda : base.values()) {
        vals.push_back(static_cast<double>(d) - 2.0 + lambda);
        vals.push_back(static_cast<double>(d) - 2.0 - lambda);
    }
    vals.insert(vals.end(), static_cast<std::size_t>(n) * static_cast<std::size_t>(d - 2), -2.0);
    return Spectrum(std::move(vals), base.tol());
}

double multiset_residual(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol) {
    return multiset_residual(a, b) <= tol;
}

bool multiset_contains(const Spectrum& sub, const Spectrum& sup, double tol) {
    if (sub.size() > sup.size()) return false;
    // Both descending; march through sup once, consuming the first unused
    // value within tol of each sub value.
    std::size_t j = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        while (j < sup.size() && sup[j] > sub[i] + tol) ++j;
        if (j == sup.size() || sup[j] < sub[i] - tol) return false;
        ++j;
    }
    return true;
}

DecompositionReport verify_decomposition(const Graph& g, double tol) {
    const Spectrum lift = adjacency_spectrum(hl2_sym(g).graph);
    const Spectrum line = adjacency_spectrum(line_graph(g).graph);
    const Spectrum anti = eigenvalues(antisymmetric_line_graph(g).as_dense());

    std::vector<double> merged = line.values();
    merged.insert(merged.end(), anti.values().begin(), anti.values().end());
    const Spectrum expected(std::move(merged));

    DecompositionReport report;
    report.lift_count = lift.size();
    report.line_count = line.size();
    report.signed_count = anti.size();
    report.max_residual = multiset_residual(lift, expected);
    report.pass = report.max_residual <= tol;
    return report;
}

double spectral_gap(const Spectrum& s) {
    if (s.size() < 2) throw TooSmall("spectral gap needs at least two eigenvalues");
    return s[0] - s[1];
}

double spectral_gap(const Graph& g) {
    if (g.vertex_count() < 2) throw TooSmall("spectral gap needs at least two vertices");
    return spectral_gap(adjacency_spectrum(g));
}

double gap_ratio(const Graph& g, LiftKind which, const Labeling* lab) {
    const double base_gap = spectral_gap(g);
    if (base_gap <= 1e-12) throw ZeroGap("base graph has zero spectral gap");
    Graph lift;
    if (which == LiftKind::symmetric) {
        lift = hl2_sym(g).graph;
    } else {
        if (lab == nullptr) throw BadLabeling("ordered gap ratio needs a labeling");
        lift = hl2(g, *lab).graph;
    }
    return spectral_gap(lift) / base_gap;
}

std::string spectrum_csv(const Spectrum& s) {
    std::string out = "value,multiplicity\n";
    char buf[64];
    for (const auto& [value, mult] : s.grouped()) {
        std::snprintf(buf, sizeof buf, "%.12g,%d\n", value, mult);
        out += buf;
    }
    return out;
}

}  // namespace liftlab
