#include "liftlab/families.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace liftlab {

Graph complete(int n) {
    if (n < 1) throw BadSize("complete(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star(int n) {
    if (n < 1) throw BadSize("star(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
    return Graph(n + 1, edges);
}

Graph path(int n) {
    if (n < 1) throw BadSize("path(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw BadSize("cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

Graph paley(int p) {
    if (!is_prime(p)) throw NotPrime("paley(p) needs prime p, got " + std::to_string(p));
    if (p % 4 != 1)
        throw BadResidueClass("paley(p) needs p = 1 (mod 4); p = " + std::to_string(p) +
                              " would make the residue relation asymmetric");
    std::vector<char> residue(static_cast<std::size_t>(p), 0);
    for (long long x = 1; x < p; ++x) residue[static_cast<std::size_t>((x * x) % p)] = 1;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (residue[static_cast<std::size_t>((j - i) % p)]) edges.emplace_back(i, j);
    return Graph(p, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed, int max_resamples) {
    if (n < 1 || d < 0 || d >= n) throw BadSize("random_regular needs 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw BadParity("random_regular needs n*d even");

    Rng rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < d; ++s) stubs[static_cast<std::size_t>(v) * d + s] = v;

    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
            return Graph(n, edges);
        }
    }
    throw Timeout("pairing model exhausted " + std::to_string(max_resamples) + " resamples");
}

Graph johnson(int n, int k) {
    if (k < 1 || k > n) throw BadSize("johnson(n,k) needs 1 <= k <= n");

    // k-subsets in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        subsets.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }

    const int count = static_cast<int>(subsets.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            std::vector<int> meet;
            std::set_intersection(subsets[static_cast<std::size_t>(a)].begin(), subsets[static_cast<std::size_t>(a)].end(),
                                  subsets[static_cast<std::size_t>(b)].begin(), subsets[static_cast<std::size_t>(b)].end(),
                                  std::back_inserter(meet));
            if (static_cast<int>(meet.size()) == k - 1) edges.emplace_back(a, b);
        }
    }
    return Graph(count, edges);
}

Graph triangular(int n) {
    if (n < 2) throw BadSize("triangular(n) needs n >= 2");
    return johnson(n, 2);
}

}  // namespace liftlab
