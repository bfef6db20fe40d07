#include "liftlab/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace liftlab {

namespace {

// Row-per-vertex adjacency bitsets for the inner loops of the searches.
class BitRows {
public:
    explicit BitRows(const Graph& g)
        : n_(g.vertex_count()), words_((n_ + 63) / 64),
          bits_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) set(u, v);
    }

    int words() const { return words_; }

    bool test(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1ull;
    }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

private:
    void set(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

struct Budget {
    long long remaining;
    const char* what;

    void spend() {
        if (--remaining < 0) throw BudgetExceeded(std::string(what) + " exceeded its node budget");
    }
};

}  // namespace

std::optional<ClawWitness> find_claw(const Graph& g) {
    const BitRows adj(g);
    for (int c = 0; c < g.vertex_count(); ++c) {
        const auto& nbrs = g.neighbors(c);
        const int deg = static_cast<int>(nbrs.size());
        for (int i = 0; i < deg; ++i) {
            for (int j = i + 1; j < deg; ++j) {
                if (adj.test(nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(j)])) continue;
                for (int k = j + 1; k < deg; ++k) {
                    if (adj.test(nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(k)])) continue;
                    if (adj.test(nbrs[static_cast<std::size_t>(j)], nbrs[static_cast<std::size_t>(k)])) continue;
                    return ClawWitness{c,
                                       {nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(j)],
                                        nbrs[static_cast<std::size_t>(k)]}};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

struct HoleSearch {
    const Graph& g;
    const BitRows& adj;
    int max_len;
    Budget budget;
    std::vector<int> path;
    std::vector<char> in_path;
    // forbidden[d]: vertices adjacent to an internal path vertex when the
    // path has d vertices.
    std::vector<std::vector<std::uint64_t>> forbidden;

    bool forbidden_test(int depth, int v) const {
        return (forbidden[static_cast<std::size_t>(depth)][static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1ull;
    }

    std::optional<std::vector<int>> dfs() {
        const int s = static_cast<int>(path.size());
        const int first = path.front();
        const int last = path.back();
        for (int w : g.neighbors(last)) {
            budget.spend();
            if (w <= first || in_path[static_cast<std::size_t>(w)]) continue;
            if (forbidden_test(s, w)) continue;  // chord to an internal vertex
            if (adj.test(w, first)) {
                const int cycle_len = s + 1;
                if (cycle_len >= 5 && cycle_len % 2 == 1) {
                    auto cycle = path;
                    cycle.push_back(w);
                    return cycle;
                }
                continue;  // closing vertex cannot extend an induced path
            }
            if (s + 1 > max_len - 1) continue;
            // last becomes internal: extend the forbidden set with its row.
            auto& next = forbidden[static_cast<std::size_t>(s + 1)];
            next = forbidden[static_cast<std::size_t>(s)];
            const std::uint64_t* row = adj.row(last);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] |= row[i];

            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            if (auto found = dfs()) return found;
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int max_len, long long budget) {
    if (max_len < 5) throw BadSize("odd-hole search needs max_len >= 5");
    const int n = g.vertex_count();
    const BitRows adj(g);

    HoleSearch search{g, adj, max_len, Budget{budget, "odd-hole search"}, {}, {}, {}};
    search.in_path.assign(static_cast<std::size_t>(n), 0);
    search.forbidden.assign(static_cast<std::size_t>(max_len) + 1,
                            std::vector<std::uint64_t>(static_cast<std::size_t>(adj.words()), 0));

    for (int v0 = 0; v0 < n; ++v0) {
        for (int v1 : g.neighbors(v0)) {
            if (v1 <= v0) continue;
            search.path = {v0, v1};
            search.in_path[static_cast<std::size_t>(v0)] = 1;
            search.in_path[static_cast<std::size_t>(v1)] = 1;
            std::fill(search.forbidden[2].begin(), search.forbidden[2].end(), 0);
            if (auto found = search.dfs()) return found;
            search.in_path[static_cast<std::size_t>(v0)] = 0;
            search.in_path[static_cast<std::size_t>(v1)] = 0;
        }
    }
    return std::nullopt;
}

namespace {

struct CliqueSearch {
    const BitRows& adj;
    Budget budget;
    int best = 0;

    void expand(std::vector<int>& cand, int size) {
        budget.spend();
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }

        // Greedy coloring of the candidates; color index bounds the clique
        // extension reachable through each vertex.
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool independent = true;
                for (int u : cls) {
                    if (adj.test(u, v)) {
                        independent = false;
                        break;
                    }
                }
                if (independent) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<int> ordered;
        std::vector<int> color;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (int v : classes[c]) {
                ordered.push_back(v);
                color.push_back(static_cast<int>(c) + 1);
            }
        }

        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (size + color[static_cast<std::size_t>(i)] <= best) return;
            const int v = ordered[static_cast<std::size_t>(i)];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj.test(ordered[static_cast<std::size_t>(j)], v)) next.push_back(ordered[static_cast<std::size_t>(j)]);
            if (size + 1 > best && next.empty()) best = size + 1;
            if (!next.empty()) expand(next, size + 1);
        }
    }
};

}  // namespace

int clique_number(const Graph& g, long long budget) {
    if (g.vertex_count() == 0) return 0;
    const BitRows adj(g);
    CliqueSearch search{adj, Budget{budget, "clique search"}};
    std::vector<int> cand(static_cast<std::size_t>(g.vertex_count()));
    std::iota(cand.begin(), cand.end(), 0);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.best = 1;
    search.expand(cand, 0);
    return search.best;
}

namespace {

struct ColoringSearch {
    const Graph& g;
    int k;
    Budget* budget;
    std::vector<int> color;   // -1 = uncolored
    int colored = 0;
    int used = 0;

    bool feasible(int v, int c) const {
        for (int w : g.neighbors(v))
            if (color[static_cast<std::size_t>(w)] == c) return false;
        return true;
    }

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            std::vector<char> seen(static_cast<std::size_t>(k), 0);
            int sat = 0;
            for (int w : g.neighbors(v)) {
                const int c = color[static_cast<std::size_t>(w)];
                if (c >= 0 && !seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    ++sat;
                }
            }
            const int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve() {
        budget->spend();
        if (colored == g.vertex_count()) return true;
        const int v = pick();
        const int limit = std::min(k, used + 1);  // at most one brand-new color
        for (int c = 0; c < limit; ++c) {
            if (!feasible(v, c)) continue;
            color[static_cast<std::size_t>(v)] = c;
            ++colored;
            const int prev_used = used;
            used = std::max(used, c + 1);
            if (solve()) return true;
            used = prev_used;
            --colored;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

bool k_colorable(const Graph& g, int k, Budget* budget) {
    if (k >= g.vertex_count()) return true;
    ColoringSearch search{g, k, budget, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1)};
    return search.solve();
}

}  // namespace

int chromatic_number(const Graph& g, long long budget) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    Budget shared{budget, "chromatic search"};
    const int lower = clique_number(g, budget);
    for (int k = lower; k < g.vertex_count(); ++k)
        if (k_colorable(g, k, &shared)) return k;
    return g.vertex_count();
}

SurrogateReport perfect_surrogate(const Graph& g, int samples, std::uint64_t seed, long long budget) {
    SurrogateReport report;
    const int n = g.vertex_count();
    if (n < 4) return report;

    Rng rng(seed);
    const int max_size = std::min(n, 18);
    for (int i = 0; i < samples; ++i) {
        Rng stream = rng.split(static_cast<std::uint64_t>(i));
        const int size = stream.uniform_int(4, max_size);
        const auto vertices = stream.sample_without_replacement(n, size);
        const Graph h = induced_subgraph(g, vertices);
        const int omega = clique_number(h, budget);
        const int chi = chromatic_number(h, budget);
        ++report.samples_checked;
        if (chi != omega) {
            report.violation = SurrogateViolation{vertices, chi, omega};
            return report;
        }
    }
    return report;
}

bool is_balanced(const SignedAdjacency& m) {
    const int n = m.dim();
    std::vector<int> side(static_cast<std::size_t>(n), 0);  // 0 unseen, +1/-1 assigned
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (side[static_cast<std::size_t>(start)] != 0) continue;
        side[static_cast<std::size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                const int s = m.sign(v, w);
                if (s == 0) continue;
                const int want = side[static_cast<std::size_t>(v)] * s;
                if (side[static_cast<std::size_t>(w)] == 0) {
                    side[static_cast<std::size_t>(w)] = want;
                    stack.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// 1-WL color refinement; returns stable colors as small ints. Colors are
// comparable across the two graphs because the signature -> id map is
// shared.
struct Refiner {
    std::map<std::vector<long long>, int> ids;

    int id_of(const std::vector<long long>& sig) {
        auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
        return it->second;
    }
};

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors, Refiner& shared) {
    for (int round = 0; round <= g.vertex_count(); ++round) {
        std::vector<int> next(colors.size());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<long long> sig;
            sig.push_back(colors[static_cast<std::size_t>(v)]);
            std::vector<int> around;
            for (int w : g.neighbors(v)) around.push_back(colors[static_cast<std::size_t>(w)]);
            std::sort(around.begin(), around.end());
            for (int c : around) sig.push_back(c);
            next[static_cast<std::size_t>(v)] = shared.id_of(sig);
        }
        if (next == colors) return colors;
        const auto distinct = [](const std::vector<int>& c) {
            std::vector<int> s(c);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            return s.size();
        };
        const bool stable = distinct(next) == distinct(colors);
        colors = std::move(next);
        if (stable) return colors;
    }
    return colors;
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Backtracking search for a color- and adjacency-preserving bijection.
// forced maps vertices of a into vertices of b before the search starts.
bool find_mapping(const Graph& a, const std::vector<int>& ca, const Graph& b, const std::vector<int>& cb,
                  const std::vector<std::pair<int, int>>& forced) {
    const int n = a.vertex_count();
    if (b.vertex_count() != n) return false;
    if (sorted_copy(ca) != sorted_copy(cb)) return false;

    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    std::vector<int> map_ba(static_cast<std::size_t>(n), -1);
    for (const auto& [x, y] : forced) {
        if (ca[static_cast<std::size_t>(x)] != cb[static_cast<std::size_t>(y)]) return false;
        map_ab[static_cast<std::size_t>(x)] = y;
        map_ba[static_cast<std::size_t>(y)] = x;
    }

    // Process unmapped vertices in order of rising color-class size.
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (map_ab[static_cast<std::size_t>(v)] < 0) order.push_back(v);
    {
        std::map<int, int> counts;
        for (int c : ca) ++counts[c];
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            const int sx = counts[ca[static_cast<std::size_t>(x)]];
            const int sy = counts[ca[static_cast<std::size_t>(y)]];
            if (sx != sy) return sx < sy;
            return x < y;
        });
    }

    auto consistent = [&](int x, int y) {
        if (ca[static_cast<std::size_t>(x)] != cb[static_cast<std::size_t>(y)]) return false;
        for (int w : a.neighbors(x)) {
            const int img = map_ab[static_cast<std::size_t>(w)];
            if (img >= 0 && !b.has_edge(y, img)) return false;
        }
        for (int w : b.neighbors(y)) {
            const int pre = map_ba[static_cast<std::size_t>(w)];
            if (pre >= 0 && !a.has_edge(x, pre)) return false;
        }
        return true;
    };

    auto backtrack = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        const int x = order[pos];
        for (int y = 0; y < n; ++y) {
            if (map_ba[static_cast<std::size_t>(y)] >= 0) continue;
            if (!consistent(x, y)) continue;
            map_ab[static_cast<std::size_t>(x)] = y;
            map_ba[static_cast<std::size_t>(y)] = x;
            if (self(self, pos + 1)) return true;
            map_ab[static_cast<std::size_t>(x)] = -1;
            map_ba[static_cast<std::size_t>(y)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

std::vector<int> initial_colors(const Graph& g, Refiner& shared) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        colors[static_cast<std::size_t>(v)] = shared.id_of({g.degree(v)});
    return colors;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > 12 || b.vertex_count() > 12)
        throw TooLarge("isomorphism test limited to 12 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    Refiner shared;
    const auto ca = refine_colors(a, initial_colors(a, shared), shared);
    const auto cb = refine_colors(b, initial_colors(b, shared), shared);
    return find_mapping(a, ca, b, cb, {});
}

namespace {

long long automorphisms_from(const Graph& g, std::vector<int> colors, Refiner& shared, int fresh) {
    colors = refine_colors(g, colors, shared);

    // First non-singleton color class, smallest class wins.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < g.vertex_count(); ++v) classes[colors[static_cast<std::size_t>(v)]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : classes) {
        if (members.size() < 2) continue;
        if (target == nullptr || members.size() < target->size()) target = &members;
    }
    if (target == nullptr) return 1;  // discrete coloring: identity only

    const int t = target->front();
    long long orbit = 0;
    for (int w : *target) {
        if (w == t || find_mapping(g, colors, g, colors, {{t, w}})) ++orbit;
    }

    auto individualized = colors;
    individualized[static_cast<std::size_t>(t)] = shared.id_of({-1000 - fresh});
    return orbit * automorphisms_from(g, std::move(individualized), shared, fresh + 1);
}

}  // namespace

long long automorphism_count(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices) throw TooLarge("automorphism count over the vertex cap");
    if (g.vertex_count() == 0) return 1;
    Refiner shared;
    return automorphisms_from(g, initial_colors(g, shared), shared, 0);
}

int count_ordered_lift_classes(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 5) throw TooLarge("ordered-lift class count enumerates n! labelings; n <= 5");

    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 0);

    std::vector<Graph> representatives;
    do {
        const Graph lift = hl2(g, Labeling(ranks)).graph;
        bool known = false;
        for (const Graph& rep : representatives) {
            if (rep.vertex_count() != lift.vertex_count() || rep.edge_count() != lift.edge_count()) continue;
            if (is_isomorphic(rep, lift)) {
                known = true;
                break;
            }
        }
        if (!known) representatives.push_back(lift);
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return static_cast<int>(representatives.size());
}

}  // namespace liftlab
