#include "liftlab/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace liftlab {

namespace {

void check_labeling(const Graph& g, const Labeling& lab) {
    if (lab.size() != g.vertex_count())
        throw BadLabeling("labeling size does not match vertex count");
}

}  // namespace

BipartiteCover ordered_cover(const Graph& g, const Labeling& lab) {
    check_labeling(g, lab);
    BipartiteCover cover;
    cover.base_n = g.vertex_count();
    cover.arity = 1;
    for (const auto& [u, v] : g.edges()) {
        if (lab.rank(u) < lab.rank(v))
            cover.edges.push_back(VertexTag{{u}, {v}});
        else
            cover.edges.push_back(VertexTag{{v}, {u}});
    }
    std::sort(cover.edges.begin(), cover.edges.end());
    return cover;
}

BipartiteCover symmetric_cover(const Graph& g) {
    BipartiteCover cover;
    cover.base_n = g.vertex_count();
    cover.arity = 1;
    cover.edges.reserve(static_cast<std::size_t>(2) * static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) {
        cover.edges.push_back(VertexTag{{u}, {v}});
        cover.edges.push_back(VertexTag{{v}, {u}});
    }
    std::sort(cover.edges.begin(), cover.edges.end());
    return cover;
}

LiftGraph cover_line_graph(const BipartiteCover& cover) {
    const int n = static_cast<int>(cover.edges.size());

    // Cover edges sharing a side tuple form a clique in the line graph.
    // Two distinct cover edges share at most one side, so no pair is
    // emitted twice.
    std::vector<std::pair<int, int>> lift_edges;
    std::map<std::vector<int>, std::vector<int>> by_side;

    for (int i = 0; i < n; ++i) by_side[cover.edges[static_cast<std::size_t>(i)].top].push_back(i);
    for (const auto& [tuple, bucket] : by_side)
        for (std::size_t a = 0; a < bucket.size(); ++a)
            for (std::size_t b = a + 1; b < bucket.size(); ++b)
                lift_edges.emplace_back(bucket[a], bucket[b]);

    by_side.clear();
    for (int i = 0; i < n; ++i) by_side[cover.edges[static_cast<std::size_t>(i)].bottom].push_back(i);
    for (const auto& [tuple, bucket] : by_side)
        for (std::size_t a = 0; a < bucket.size(); ++a)
            for (std::size_t b = a + 1; b < bucket.size(); ++b)
                lift_edges.emplace_back(bucket[a], bucket[b]);

    LiftGraph out;
    out.graph = Graph(n, lift_edges);
    out.tags = cover.edges;
    return out;
}

LiftGraph hl2(const Graph& g, const Labeling& lab) {
    return cover_line_graph(ordered_cover(g, lab));
}

LiftGraph hl2_sym(const Graph& g) {
    return cover_line_graph(symmetric_cover(g));
}

Graph twin_quotient(const LiftGraph& lift) {
    const int n = lift.graph.vertex_count();
    if (static_cast<int>(lift.tags.size()) != n) throw MissingTags("lift has no vertex tags");

    // Tags must be directed pairs closed under the twin involution.
    std::map<VertexTag, int> seen;
    for (const auto& t : lift.tags) {
        if (t.top.size() != 1 || t.bottom.size() != 1)
            throw MissingTags("twin quotient needs directed-pair tags");
        if (t.top[0] == t.bottom[0]) throw MissingTags("degenerate tag (u,u)");
        ++seen[t];
    }
    for (const auto& [tag, cnt] : seen)
        if (cnt != 1 || seen.find(VertexTag{tag.bottom, tag.top}) == seen.end())
            throw MissingTags("tags do not come in twin pairs");

    // Orbit representative: the pair with smaller tail, i.e. ({min},{max}).
    // Map ordering makes representative ids match line_graph vertex order.
    std::map<VertexTag, int> rep_id;
    for (const auto& t : lift.tags) {
        const int u = t.top[0], v = t.bottom[0];
        rep_id.emplace(VertexTag{{std::min(u, v)}, {std::max(u, v)}}, 0);
    }
    int next = 0;
    for (auto& [tag, id] : rep_id) id = next++;

    std::vector<int> orbit(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const VertexTag& t = lift.tags[static_cast<std::size_t>(i)];
        const int u = t.top[0], v = t.bottom[0];
        orbit[static_cast<std::size_t>(i)] = rep_id[VertexTag{{std::min(u, v)}, {std::max(u, v)}}];
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j : lift.graph.neighbors(i))
            if (i < j && orbit[static_cast<std::size_t>(i)] != orbit[static_cast<std::size_t>(j)])
                edges.emplace_back(orbit[static_cast<std::size_t>(i)], orbit[static_cast<std::size_t>(j)]);
    return Graph(next, edges);
}

EmbeddingCertificate embed_ordered_in_symmetric(const Graph& g, const Labeling& lab) {
    const LiftGraph ordered = hl2(g, lab);
    const LiftGraph symmetric = hl2_sym(g);
    const LiftGraph line = line_graph(g);

    std::map<VertexTag, int> sym_id;
    for (int i = 0; i < symmetric.graph.vertex_count(); ++i)
        sym_id[symmetric.tags[static_cast<std::size_t>(i)]] = i;
    std::map<VertexTag, int> line_id;
    for (int i = 0; i < line.graph.vertex_count(); ++i)
        line_id[line.tags[static_cast<std::size_t>(i)]] = i;

    EmbeddingCertificate cert;
    cert.into_symmetric.reserve(ordered.tags.size());
    cert.into_line_graph.reserve(ordered.tags.size());
    for (const auto& tag : ordered.tags) {
        cert.into_symmetric.push_back(sym_id.at(tag));
        const int u = tag.top[0], v = tag.bottom[0];
        cert.into_line_graph.push_back(line_id.at(VertexTag{{std::min(u, v)}, {std::max(u, v)}}));
    }

    cert.edges_preserved = true;
    for (int i = 0; i < ordered.graph.vertex_count(); ++i) {
        for (int j : ordered.graph.neighbors(i)) {
            if (j <= i) continue;
            const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            if (!symmetric.graph.has_edge(cert.into_symmetric[si], cert.into_symmetric[sj]))
                cert.edges_preserved = false;
            if (!line.graph.has_edge(cert.into_line_graph[si], cert.into_line_graph[sj]))
                cert.edges_preserved = false;
        }
    }
    return cert;
}

SignedAdjacency::SignedAdjacency(std::vector<std::pair<int, int>> edge_index, std::vector<std::int8_t> entries)
    : edge_index_(std::move(edge_index)), entries_(std::move(entries)) {}

DenseSymMatrix SignedAdjacency::as_dense() const {
    DenseSymMatrix out(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) out.at(i, j) = static_cast<double>(sign(i, j));
    return out;
}

void SignedAdjacency::switch_edge(int e) {
    const int n = dim();
    for (int j = 0; j < n; ++j) {
        if (j == e) continue;
        entries_[static_cast<std::size_t>(e) * n + j] = static_cast<std::int8_t>(-entries_[static_cast<std::size_t>(e) * n + j]);
        entries_[static_cast<std::size_t>(j) * n + e] = static_cast<std::int8_t>(-entries_[static_cast<std::size_t>(j) * n + e]);
    }
}

SignedAdjacency antisymmetric_line_graph(const Graph& g) {
    const auto edges = g.edges();  // oriented (u,v), u < v, lexicographic
    const int m = static_cast<int>(edges.size());
    std::vector<std::int8_t> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);

    for (int i = 0; i < m; ++i) {
        const auto [u, v] = edges[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            const auto [x, y] = edges[static_cast<std::size_t>(j)];
            int s = 0;
            if ((u == x && v != y) || (v == y && u != x))
                s = 1;  // shared tail or head
            else if ((u == y && v != x) || (v == x && u != y))
                s = -1;  // crossed overlap
            entries[static_cast<std::size_t>(i) * m + j] = static_cast<std::int8_t>(s);
            entries[static_cast<std::size_t>(j) * m + i] = static_cast<std::int8_t>(s);
        }
    }
    return SignedAdjacency(edges, std::move(entries));
}

DenseSymMatrix unsigned_variant(const SignedAdjacency& m) {
    DenseSymMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = std::abs(static_cast<double>(m.sign(i, j)));
    return out;
}

TailHeadIncidence tail_head_incidence(const Graph& g) {
    const auto edges = g.edges();
    const int n = g.vertex_count();
    const int m = static_cast<int>(edges.size());
    TailHeadIncidence inc;
    inc.tail = IntMatrix{n, m, std::vector<long long>(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0)};
    inc.head = IntMatrix{n, m, std::vector<long long>(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0)};
    for (int e = 0; e < m; ++e) {
        inc.tail.at(edges[static_cast<std::size_t>(e)].first, e) = 1;
        inc.head.at(edges[static_cast<std::size_t>(e)].second, e) = 1;
    }
    return inc;
}

IntMatrix gram_matrix(const Graph& g) {
    const auto inc = tail_head_incidence(g);
    const int n = inc.tail.rows;
    const int m = inc.tail.cols;
    IntMatrix d{n, m, std::vector<long long>(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0)};
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < m; ++e) d.at(i, e) = inc.tail.at(i, e) - inc.head.at(i, e);

    IntMatrix out{m, m, std::vector<long long>(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0)};
    for (int e = 0; e < m; ++e)
        for (int f = e; f < m; ++f) {
            long long sum = 0;
            for (int i = 0; i < n; ++i) sum += d.at(i, e) * d.at(i, f);
            out.at(e, f) = sum;
            out.at(f, e) = sum;
        }
    return out;
}

bool gram_identity_holds(const Graph& g) {
    const SignedAdjacency m = antisymmetric_line_graph(g);
    const IntMatrix gram = gram_matrix(g);
    if (gram.rows != m.dim()) return false;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const long long expected = m.sign(i, j) + (i == j ? 2 : 0);
            if (gram.at(i, j) != expected) return false;
        }
    return true;
}

std::vector<std::vector<int>> ordered_tuples(const Graph& g, int r) {
    if (r < 2) throw BadSize("ordered tuples need r >= 2");
    const int len = r - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;

    // Depth-first in vertex-id order yields lexicographic output.
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool ok = true;
            for (int w : cur) {
                if (w == v || !g.has_edge(w, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

LiftGraph hl_rd(const Graph& g, int r, int d, LiftMode mode, const Labeling* lab) {
    if (r < 2 || d < 1 || d > r - 1) throw BadSize("hl_rd needs r >= 2 and 1 <= d <= r-1");
    if (mode == LiftMode::ordered) {
        if (lab == nullptr) throw BadLabeling("ordered mode needs a labeling");
        check_labeling(g, *lab);
    }

    const auto tuples = ordered_tuples(g, r);
    const int t = static_cast<int>(tuples.size());
    const int len = r - 1;

    BipartiteCover cover;
    cover.base_n = g.vertex_count();
    cover.arity = len;
    for (int a = 0; a < t; ++a) {
        for (int b = 0; b < t; ++b) {
            if (a == b) continue;
            const auto& x = tuples[static_cast<std::size_t>(a)];
            const auto& y = tuples[static_cast<std::size_t>(b)];
            int differing = 0;
            bool legal = true;
            for (int i = 0; i < len && legal; ++i) {
                const int xi = x[static_cast<std::size_t>(i)], yi = y[static_cast<std::size_t>(i)];
                if (xi == yi) continue;
                ++differing;
                if (differing > d || !g.has_edge(xi, yi)) legal = false;
                if (legal && mode == LiftMode::ordered && lab->rank(xi) >= lab->rank(yi)) legal = false;
            }
            if (legal && differing == d) cover.edges.push_back(VertexTag{x, y});
        }
    }
    std::sort(cover.edges.begin(), cover.edges.end());
    return cover_line_graph(cover);
}

}  // namespace liftlab
