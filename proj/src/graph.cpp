#include "liftlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace liftlab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) : n_(n) {
    if (n < 0) throw BadSize("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edge_pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw OutOfRange("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    m_ = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<int>(nbrs.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::is_regular(int* degree_out) const {
    if (n_ == 0) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Labeling::Labeling(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    const int n = static_cast<int>(ranks_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int r : ranks_) {
        if (r < 0 || r >= n || seen[static_cast<std::size_t>(r)])
            throw BadLabeling("ranks must be a permutation of 0..n-1");
        seen[static_cast<std::size_t>(r)] = 1;
    }
}

Labeling Labeling::identity(int n) {
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 0);
    return Labeling(std::move(ranks));
}

Labeling Labeling::random_labeling(int n, Rng& rng) {
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 0);
    rng.shuffle(ranks);
    return Labeling(std::move(ranks));
}

double DenseSymMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
    return worst;
}

LiftGraph line_graph(const Graph& g) {
    const auto base_edges = g.edges();
    const int m = static_cast<int>(base_edges.size());

    // Edge index per vertex; base_edges is lex sorted, so vertex order of
    // the result is canonical.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < m; ++e) {
        incident[static_cast<std::size_t>(base_edges[static_cast<std::size_t>(e)].first)].push_back(e);
        incident[static_cast<std::size_t>(base_edges[static_cast<std::size_t>(e)].second)].push_back(e);
    }

    std::vector<std::pair<int, int>> lift_edges;
    for (const auto& bucket : incident)
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                lift_edges.emplace_back(bucket[i], bucket[j]);

    LiftGraph out;
    out.graph = Graph(m, lift_edges);
    out.tags.reserve(static_cast<std::size_t>(m));
    for (const auto& [u, v] : base_edges) out.tags.push_back(VertexTag{{u}, {v}});
    return out;
}

Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw OutOfRange("subgraph vertex outside graph");

    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) new_id[static_cast<std::size_t>(s[i])] = static_cast<int>(i);

    std::vector<std::pair<int, int>> kept;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && new_id[static_cast<std::size_t>(w)] >= 0)
                kept.emplace_back(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(w)]);
    return Graph(static_cast<int>(s.size()), kept);
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> anti;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) anti.emplace_back(u, v);
    return Graph(n, anti);
}

DenseSymMatrix adjacency_matrix(const Graph& g) {
    DenseSymMatrix a(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) a.at(u, v) = 1.0;
    return a;
}

DenseSymMatrix laplacian_matrix(const Graph& g) {
    DenseSymMatrix l(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        l.at(u, u) = static_cast<double>(g.degree(u));
        for (int v : g.neighbors(u)) l.at(u, v) = -1.0;
    }
    return l;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(start);
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] >= 0) continue;
        color[static_cast<std::size_t>(start)] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<int> degree_histogram(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    std::vector<int> hist(static_cast<std::size_t>(g.max_degree()) + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++hist[static_cast<std::size_t>(g.degree(v))];
    return hist;
}

}  // namespace liftlab
