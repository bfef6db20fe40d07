#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftlab/graph.hpp"
#include "liftlab/lifts.hpp"

namespace liftlab {

// Real eigenvalue multiset, sorted descending, with a grouping tolerance
// for reading off multiplicities.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double tol = 1e-9);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    double tol() const { return tol_; }

    // (representative, multiplicity) pairs; a value joins the current group
    // when it is within tol of the group's representative.
    std::vector<std::pair<double, int>> grouped() const;

private:
    std::vector<double> values_;  // descending
    double tol_ = 1e-9;
};

// All eigenvalues of a symmetric matrix, via Householder tridiagonalization
// followed by implicit symmetric QR (Eigen's SelfAdjointEigenSolver), which
// is guaranteed to return real values. Throws NotSymmetric when the input
// deviates from symmetry by more than 1e-12.
Spectrum eigenvalues(const DenseSymMatrix& m, double tol = 1e-9);

Spectrum adjacency_spectrum(const Graph& g, double tol = 1e-9);
Spectrum laplacian_spectrum(const Graph& g, double tol = 1e-9);

// Spectrum of the symmetric lift of a d-regular base on n vertices:
// {d-2+lambda_i} and {d-2-lambda_i} over the base spectrum, plus -2 with
// multiplicity n(d-2). Requires lambda_1 = d and d >= 2.
Spectrum predicted_lift_spectrum(const Spectrum& base, int d, int n);

struct DecompositionReport {
    bool pass = false;
    double max_residual = 0.0;
    std::size_t lift_count = 0;  // = line_count + signed_count when sizes agree
    std::size_t line_count = 0;
    std::size_t signed_count = 0;
};

// Checks Spec(HL2'(G)) = Spec(L(G)) (+) Spec(L^-(G)) as multisets, pairing
// sorted lists value by value.
DecompositionReport verify_decomposition(const Graph& g, double tol = 1e-6);

// lambda_1 - lambda_2 of the adjacency spectrum (multiplicity-aware).
double spectral_gap(const Graph& g);
double spectral_gap(const Spectrum& s);

// Largest pairwise gap between sorted multisets of equal size; +inf when
// sizes differ.
double multiset_residual(const Spectrum& a, const Spectrum& b);
bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol);

// True iff an injective matching of sub into sup exists with each pair
// within tol. Greedy two-pointer on the sorted lists.
bool multiset_contains(const Spectrum& sub, const Spectrum& sup, double tol);

enum class LiftKind { ordered, symmetric };

// Gap(lift)/Gap(G). Throws ZeroGap when the base gap vanishes.
double gap_ratio(const Graph& g, LiftKind which, const Labeling* lab = nullptr);

// CSV rows "value,multiplicity", 12 significant digits.
std::string spectrum_csv(const Spectrum& s);

}  // namespace liftlab
