#include "doctest.h"

#include <algorithm>

#include "liftlab/analysis.hpp"
#include "liftlab/families.hpp"
#include "liftlab/lifts.hpp"
#include "liftlab/rng.hpp"

using namespace liftlab;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph petersen() { return complement(triangular(5)); }

}  // namespace

TEST_CASE("claw detection") {
    const auto witness = find_claw(star(3));
    REQUIRE(witness.has_value());
    CHECK(witness->center == 0);

    CHECK(is_claw_free(cycle(5)));
    CHECK(is_claw_free(hl2_sym(paley(13)).graph));
    CHECK(is_claw_free(line_graph(petersen()).graph));
    CHECK(!is_claw_free(star(4)));

    // A found witness really is an induced claw.
    const Graph g = complement(cycle(7));
    if (auto w = find_claw(g)) {
        for (int leaf : w->leaves) CHECK(g.has_edge(w->center, leaf));
        CHECK(!g.has_edge(w->leaves[0], w->leaves[1]));
        CHECK(!g.has_edge(w->leaves[0], w->leaves[2]));
        CHECK(!g.has_edge(w->leaves[1], w->leaves[2]));
    }
}

TEST_CASE("odd hole search") {
    const auto c5 = find_odd_hole(cycle(5), 9);
    REQUIRE(c5.has_value());
    CHECK(c5->size() == 5);

    // C7 has no hole of length <= 5 but one of length 7.
    CHECK(!find_odd_hole(cycle(7), 5).has_value());
    const auto c7 = find_odd_hole(cycle(7), 7);
    REQUIRE(c7.has_value());
    CHECK(c7->size() == 7);

    CHECK(!find_odd_hole(cycle(6), 9).has_value());
    CHECK(!find_odd_hole(complete(6), 9).has_value());

    // Petersen has girth 5, so its line graph contains induced 5-cycles.
    const auto hole = find_odd_hole(line_graph(petersen()).graph, 5);
    REQUIRE(hole.has_value());

    CHECK_THROWS_AS(find_odd_hole(cycle(5), 3), BadSize);
    CHECK_THROWS_AS(find_odd_hole(hl2_sym(paley(13)).graph, 9, 10), BudgetExceeded);
}

TEST_CASE("found holes are induced odd cycles") {
    Rng rng(321);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Rng stream = rng.split(static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(stream.uniform_int(5, 11), 0.35, stream);
        const auto hole = find_odd_hole(g, 9);
        if (!hole.has_value()) continue;
        ++found;
        const auto& cyc = *hole;
        const int len = static_cast<int>(cyc.size());
        CHECK(len >= 5);
        CHECK(len % 2 == 1);
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                CHECK(g.has_edge(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)]) == consecutive);
            }
    }
    CHECK(found > 5);
}

TEST_CASE("symmetric lifts are claw-free and odd-hole-free") {
    Rng rng(888);
    for (int trial = 0; trial < 30; ++trial) {
        Rng stream = rng.split(static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(stream.uniform_int(3, 9), 0.5, stream);
        const Graph lift = hl2_sym(g).graph;
        CHECK(is_claw_free(lift));
        CHECK(!find_odd_hole(lift, 9).has_value());

        const Labeling lab = Labeling::random_labeling(g.vertex_count(), stream);
        const Graph ordered = hl2(g, lab).graph;
        CHECK(is_claw_free(ordered));
        CHECK(!find_odd_hole(ordered, 9).has_value());
    }
}

TEST_CASE("clique number") {
    CHECK(clique_number(hl2_sym(complete(4)).graph) == 3);
    CHECK(clique_number(hl2_sym(paley(13)).graph) == 6);
    for (int n : {2, 5, 9}) CHECK(clique_number(complete(n)) == n);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(Graph(4, {})) == 1);
    CHECK_THROWS_AS(clique_number(paley(29), 5), BudgetExceeded);
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(hl2_sym(complete(4)).graph) == 3);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(star(5)) == 2);
    CHECK(chromatic_number(complete(7)) == 7);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(Graph(3, {})) == 1);
}

TEST_CASE("clique equals chromatic on small regular lifts") {
    for (const Graph& g : {complete(4), complete(5), cycle(6), petersen()}) {
        int d = 0;
        REQUIRE(g.is_regular(&d));
        const Graph lift = hl2_sym(g).graph;
        CHECK(clique_number(lift) == d);
        CHECK(chromatic_number(lift) == d);
    }
}

TEST_CASE("perfection surrogate") {
    const auto clean = perfect_surrogate(hl2_sym(complete(5)).graph, 50, 7);
    CHECK(clean.clean());
    CHECK(clean.samples_checked == 50);

    const auto c5 = perfect_surrogate(cycle(5), 50, 7);
    REQUIRE(!c5.clean());
    CHECK(c5.violation->chromatic == 3);
    CHECK(c5.violation->clique == 2);

    // L(Petersen) is imperfect: an induced C5 gives chi=3 > omega=2 on that
    // subgraph.
    const Graph lp = line_graph(petersen()).graph;
    const auto hole = find_odd_hole(lp, 5);
    REQUIRE(hole.has_value());
    const Graph sub = induced_subgraph(lp, *hole);
    CHECK(clique_number(sub) == 2);
    CHECK(chromatic_number(sub) == 3);
}

TEST_CASE("balance of the signed line graph") {
    CHECK(is_balanced(antisymmetric_line_graph(star(3))));   // all +1 triangle
    CHECK(!is_balanced(antisymmetric_line_graph(complete(3))));  // (+,-,+)
    CHECK(is_balanced(antisymmetric_line_graph(Graph(3, {}))));
    CHECK(is_balanced(antisymmetric_line_graph(path(4))));
}

TEST_CASE("balance is invariant under switching") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Rng stream = rng.split(static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(stream.uniform_int(3, 8), 0.5, stream);
        if (g.edge_count() == 0) continue;
        SignedAdjacency m = antisymmetric_line_graph(g);
        const bool before = is_balanced(m);
        for (int step = 0; step < 6; ++step)
            m.switch_edge(stream.uniform_int(0, m.dim() - 1));
        CHECK(is_balanced(m) == before);
    }
}

TEST_CASE("isomorphism") {
    CHECK(is_isomorphic(hl2_sym(complete(3)).graph, cycle(6)));
    CHECK(!is_isomorphic(hl2_sym(complete(3)).graph, hl2_sym(star(3)).graph));
    const Graph g = paley(13);
    CHECK_THROWS_AS(is_isomorphic(g, g), TooLarge);

    Rng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        Rng stream = rng.split(static_cast<std::uint64_t>(trial));
        const Graph a = random_graph(stream.uniform_int(1, 9), 0.5, stream);
        CHECK(is_isomorphic(a, a));

        // Relabeled copy is isomorphic.
        std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        stream.shuffle(perm);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : a.edges())
            edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        CHECK(is_isomorphic(a, Graph(a.vertex_count(), edges)));
    }

    // Same degree sequence, different structure: C6 vs 2K3.
    CHECK(!is_isomorphic(cycle(6), Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(complete(4)) == 24);
    CHECK(automorphism_count(path(3)) == 2);
    CHECK(automorphism_count(cycle(6)) == 12);
    CHECK(automorphism_count(petersen()) == 120);
    CHECK(automorphism_count(star(4)) == 24);
    CHECK(automorphism_count(Graph(3, {})) == 6);
    CHECK(automorphism_count(hl2(complete(5), Labeling::identity(5)).graph) == 2);
    CHECK_THROWS_AS(automorphism_count(complete(13)), TooLarge);
    CHECK(automorphism_count(complete(12)) == 479001600LL);
}

TEST_CASE("ordered lift isomorphism classes") {
    CHECK(count_ordered_lift_classes(complete(3)) == 1);  // always P3
    CHECK(count_ordered_lift_classes(star(3)) == 2);      // K3 or K2+K1
    CHECK(count_ordered_lift_classes(complete(4)) == 1);
    CHECK_THROWS_AS(count_ordered_lift_classes(cycle(6)), TooLarge);

    // Lemma bound n!/|Aut(G)| over the small connected graphs.
    const Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    for (const Graph& g : {path(2), path(3), complete(3), path(4), star(3), cycle(4), paw, diamond,
                           complete(4), complete(5)}) {
        const long long bound_num = [&] {
            long long f = 1;
            for (int i = 2; i <= g.vertex_count(); ++i) f *= i;
            return f;
        }();
        const long long aut = automorphism_count(g);
        CHECK(count_ordered_lift_classes(g) * aut <= bound_num);
    }
}
