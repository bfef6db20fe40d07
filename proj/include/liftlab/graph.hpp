#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "liftlab/errors.hpp"
#include "liftlab/rng.hpp"

namespace liftlab {

// Simple undirected graph on dense vertex ids 0..n-1 with sorted neighbor
// lists. No self-loops, no multi-edges; immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects loops, collapses duplicate pairs.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    bool is_regular(int* degree_out = nullptr) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Injective vertex labeling: rank(v) is the position of v in the order.
class Labeling {
public:
    explicit Labeling(std::vector<int> ranks);

    static Labeling identity(int n);
    static Labeling random_labeling(int n, Rng& rng);

    int size() const { return static_cast<int>(ranks_.size()); }
    int rank(int v) const { return ranks_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& ranks() const { return ranks_; }

private:
    std::vector<int> ranks_;
};

// Dense symmetric real matrix, row-major.
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(int dim)
        : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {}

    int dim() const { return dim_; }
    double& at(int i, int j) { return entries_[idx(i, j)]; }
    double at(int i, int j) const { return entries_[idx(i, j)]; }
    const std::vector<double>& data() const { return entries_; }
    double max_asymmetry() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
    }

    int dim_ = 0;
    std::vector<double> entries_;
};

// Origin of a vertex that was built from another graph: a pair of side
// tuples (cover edge top->bottom), or ({u},{v}) with u < v for a plain
// line-graph vertex.
struct VertexTag {
    std::vector<int> top;
    std::vector<int> bottom;

    auto operator<=>(const VertexTag&) const = default;
};

// Graph whose vertices remember where they came from. tags[i] belongs to
// vertex i; tags are strictly increasing, so vertex order is canonical.
struct LiftGraph {
    Graph graph;
    std::vector<VertexTag> tags;
};

// Line graph: one vertex per edge of g (in edges() order), adjacent when
// the edges share an endpoint.
LiftGraph line_graph(const Graph& g);

// Subgraph induced by S, vertices relabeled 0..|S|-1 in ascending id order.
Graph induced_subgraph(const Graph& g, std::vector<int> s);

Graph complement(const Graph& g);

DenseSymMatrix adjacency_matrix(const Graph& g);
DenseSymMatrix laplacian_matrix(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Proper 2-coloring when one exists (iff g has no odd cycle).
std::optional<std::vector<int>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// histogram[k] = number of vertices of degree exactly k; last index is the
// maximum degree. Empty for the empty graph.
std::vector<int> degree_histogram(const Graph& g);

}  // namespace liftlab
