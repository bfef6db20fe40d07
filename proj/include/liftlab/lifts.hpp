#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liftlab/graph.hpp"

namespace liftlab {

// Two-sided cover of a base graph. Each cover edge joins a top-copy tuple
// to a bottom-copy tuple; for the two-lifts the tuples are single vertices
// and the edge records the directed base pair (top -> bottom).
struct BipartiteCover {
    int base_n = 0;
    int arity = 1;                 // tuple length per side
    std::vector<VertexTag> edges;  // strictly increasing (top, bottom) order
};

// One cover edge per base edge, directed low rank -> high rank.
BipartiteCover ordered_cover(const Graph& g, const Labeling& lab);

// Both directions of every base edge; label-independent.
BipartiteCover symmetric_cover(const Graph& g);

// Line graph of a cover: one vertex per cover edge, adjacent when two cover
// edges share a side tuple. Vertex order is the cover's tag order.
LiftGraph cover_line_graph(const BipartiteCover& cover);

// Ordered lift: line graph of the ordered cover. Vertices are directed base
// pairs (u,v) with rank(u) < rank(v); adjacency = equal first or equal
// second coordinate.
LiftGraph hl2(const Graph& g, const Labeling& lab);

// Symmetric lift: line graph of the symmetric cover, on all 2|E| directed
// pairs. (2d-2)-regular when g is d-regular.
LiftGraph hl2_sym(const Graph& g);

// Quotient of a symmetric lift by the twin involution (u,v) <-> (v,u).
// Returns the line graph of the base, vertex-for-vertex.
Graph twin_quotient(const LiftGraph& lift);

// Vertex maps certifying HL2 is a subgraph of HL2' (tag (u,v) -> (u,v))
// and of L(G) after forgetting direction.
struct EmbeddingCertificate {
    std::vector<int> into_symmetric;   // hl2 vertex -> hl2_sym vertex
    std::vector<int> into_line_graph;  // hl2 vertex -> line graph vertex
    bool edges_preserved = false;
};
EmbeddingCertificate embed_ordered_in_symmetric(const Graph& g, const Labeling& lab);

// Signed adjacency of the antisymmetric line graph L^-(G), indexed by the
// oriented edges (u,v), u < v, in lexicographic order. Entry rules:
//   +1 shared tail or shared head, -1 crossed overlap, 0 otherwise.
class SignedAdjacency {
public:
    SignedAdjacency() = default;
    SignedAdjacency(std::vector<std::pair<int, int>> edge_index, std::vector<std::int8_t> entries);

    int dim() const { return static_cast<int>(edge_index_.size()); }
    int sign(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(j)];
    }
    const std::vector<std::pair<int, int>>& edge_index() const { return edge_index_; }

    DenseSymMatrix as_dense() const;

    // Switch orientation of edge e: negate row and column e.
    void switch_edge(int e);

private:
    std::vector<std::pair<int, int>> edge_index_;
    std::vector<std::int8_t> entries_;
};

SignedAdjacency antisymmetric_line_graph(const Graph& g);

// |M| entrywise; equals the adjacency matrix of line_graph(g) under the
// shared edge index.
DenseSymMatrix unsigned_variant(const SignedAdjacency& m);

// Small exact integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    bool operator==(const IntMatrix&) const = default;
};

// Tail and head incidence of the oriented edges (u,v), u < v: column e of
// tail marks u, column e of head marks v.
struct TailHeadIncidence {
    IntMatrix tail;
    IntMatrix head;
};
TailHeadIncidence tail_head_incidence(const Graph& g);

// (T - H)^T (T - H), exact. Equals M + 2I by the Gram identity.
IntMatrix gram_matrix(const Graph& g);

bool gram_identity_holds(const Graph& g);

// All ordered (r-1)-tuples of distinct vertices whose underlying set is a
// clique, in lexicographic order.
std::vector<std::vector<int>> ordered_tuples(const Graph& g, int r);

enum class LiftMode { symmetric, ordered };

// Parameterized lift HL_{r,d}: cover on ordered (r-1)-clique tuples, a top
// tuple joined to a bottom tuple when they differ in exactly d coordinates,
// each differing coordinate being a base edge. Ordered mode additionally
// requires rank(x_i) < rank(y_i) in every differing coordinate.
// hl_rd(g, 2, 1, symmetric) equals hl2_sym(g) tag-for-tag.
LiftGraph hl_rd(const Graph& g, int r, int d, LiftMode mode, const Labeling* lab = nullptr);

}  // namespace liftlab
