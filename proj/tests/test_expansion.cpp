#include "doctest.h"

#include <cmath>

#include "liftlab/expansion.hpp"
#include "liftlab/families.hpp"
#include "liftlab/lifts.hpp"
#include "liftlab/rng.hpp"

using namespace liftlab;

TEST_CASE("edge boundary") {
    // Any 3-subset of K6 has 3*3 crossing edges.
    CHECK(edge_boundary(complete(6), {0, 1, 2}) == 9);
    CHECK(edge_boundary(complete(6), {1, 3, 5}) == 9);

    CHECK(edge_boundary(cycle(6), {0, 1, 2}) == 2);

    // Symmetric in S vs V\S.
    Rng rng(3);
    const Graph g = random_regular(20, 3, 17);
    for (int trial = 0; trial < 10; ++trial) {
        Rng stream = rng.split(static_cast<std::uint64_t>(trial));
        const auto s = stream.sample_without_replacement(20, stream.uniform_int(1, 19));
        std::vector<int> rest;
        std::vector<char> inside(20, 0);
        for (int v : s) inside[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < 20; ++v)
            if (!inside[static_cast<std::size_t>(v)]) rest.push_back(v);
        CHECK(edge_boundary(g, s) == edge_boundary(g, rest));
    }

    CHECK_THROWS_AS(edge_boundary(complete(4), {}), BadSet);
    CHECK_THROWS_AS(edge_boundary(complete(4), {0, 1, 2, 3}), BadSet);
    CHECK_THROWS_AS(edge_boundary(complete(4), {9}), BadSet);
}

TEST_CASE("cheeger estimate") {
    // Every 3-subset of K6 looks alike.
    CHECK(cheeger_estimate(complete(6), 3, 5, 1) == doctest::Approx(3.0));

    // Deterministic per seed.
    const Graph g = random_regular(40, 3, 11);
    CHECK(cheeger_estimate(g, 5, 50, 9) == cheeger_estimate(g, 5, 50, 9));

    // More samples from the same stream can only lower the minimum.
    const double few = cheeger_estimate(g, 5, 20, 9);
    const double many = cheeger_estimate(g, 5, 100, 9);
    CHECK(many <= few);

    CHECK_THROWS_AS(cheeger_estimate(g, 0, 10, 1), BadSize);
    CHECK_THROWS_AS(cheeger_estimate(g, 40, 10, 1), BadSize);
    CHECK_THROWS_AS(cheeger_estimate(g, 5, 0, 1), BadSize);
}

TEST_CASE("paley amplification row") {
    const auto row = paley_amplification(13, 5);
    CHECK(row.base.degree == 6);
    CHECK(row.lift.degree == 10);  // 2d-2
    CHECK(row.base.vertices == 13);
    CHECK(row.lift.vertices == 78);
    CHECK(row.base.h_estimate > 0.0);
    CHECK(row.lift.h_estimate > 0.0);
    CHECK(row.amplification == doctest::Approx(row.lift.h_estimate / row.base.h_estimate));
    CHECK(row.lambda2_base == doctest::Approx((-1.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-9));
}

TEST_CASE("random regular amplification row") {
    const auto row = rrg_amplification(40, 4, 21);
    CHECK(row.base.degree == 4);
    CHECK(row.lift.degree == 6);
    CHECK(row.lift.vertices == 160);  // one vertex per directed edge: n*d
    CHECK(std::isfinite(row.amplification));
}

TEST_CASE("gap study shape and exact lift top eigenvalue") {
    const auto rows = gap_study({3}, {20, 30}, 2, 12345);
    REQUIRE(rows.size() == 1);
    const auto& row = rows[0];
    CHECK(row.trials == 4);
    CHECK(row.cells.size() == 4);
    CHECK(row.max_lambda1_symmetric_error < 1e-9);  // lambda1 = 2d-2 exactly
    CHECK(row.avg_gamma_symmetric > 0.0);
    CHECK(row.avg_gamma_ordered > 0.0);
    CHECK(row.ordered_to_symmetric ==
          doctest::Approx(row.avg_gamma_ordered / row.avg_gamma_symmetric));

    // Same seed reproduces identical cells.
    const auto again = gap_study({3}, {20, 30}, 2, 12345);
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
        CHECK(row.cells[i].gamma_ordered == again[0].cells[i].gamma_ordered);
        CHECK(row.cells[i].gamma_symmetric == again[0].cells[i].gamma_symmetric);
    }
}

TEST_CASE("friedman gap check") {
    const auto rrg = friedman_gap_check(random_regular(80, 4, 5), 99);
    CHECK(rrg.degree == 4);
    CHECK(rrg.bound == doctest::Approx(4.0 - 2.0 * std::sqrt(3.0)));
    CHECK(rrg.gap_ok);  // bound ~0.54 - slack; random 4-regular gaps clear it

    const auto pal = friedman_gap_check(paley(29), 99);
    CHECK(pal.degree == 14);
    CHECK(pal.lift_gap == doctest::Approx((29.0 - 2.0 - std::sqrt(29.0)) / 2.0).epsilon(1e-9));
    CHECK(pal.gap_ok);

    CHECK_THROWS_AS(friedman_gap_check(star(3), 1), NotRegular);
}
