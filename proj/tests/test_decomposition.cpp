#include <doctest.h>

#include <random>

#include "matchdecomp/decomposition.hpp"
#include "matchdecomp/errors.hpp"
#include "matchdecomp/oracle.hpp"
#include "support.hpp"

using namespace matchdecomp;
using namespace matchdecomp::testing;

TEST_CASE("compute_mwm examples") {
    CHECK(compute_mwm(g2()) == 4);
    CHECK(compute_mwm(build_graph(0, 0, {})) == 0);
    CHECK(compute_mwm(build_graph(3, 3, {})) == 0);
    CHECK(compute_mwm(single_edge(5)) == 5);
}

TEST_CASE("peeling trace on G2") {
    // Level 1 peels x1y1 (cover x1), level 2 the two weight-2 residuals
    // (cover y1), level 3 the unit remainder (perfect, cover x1 and x2).
    const PeelResult r = peel(g2());
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels[0].top_weight == 3);
    CHECK(r.levels[0].slice_edges == 1);
    CHECK(r.levels[0].matched == 1);
    CHECK(r.levels[1].top_weight == 2);
    CHECK(r.levels[1].slice_edges == 2);
    CHECK(r.levels[1].matched == 1);
    CHECK(r.levels[2].top_weight == 1);
    CHECK(r.levels[2].matched == 2);
    CHECK(r.levels[2].residual_after == 0);
    CHECK(r.mwm == 4);
}

TEST_CASE("compute_min_cover examples") {
    const Cover c = compute_min_cover(g2());
    CHECK(c.weight() == 4);
    CHECK(verify_cover(g2(), c));
    CHECK(c.left == std::vector<Weight>{2, 1});
    CHECK(c.right == std::vector<Weight>{1, 0});

    const BipartiteGraph empty = build_graph(2, 1, {});
    CHECK(compute_min_cover(empty) == Cover::zeros(empty));

    const Cover left_cover = compute_min_cover(single_edge(5));
    CHECK(left_cover.left[0] == 5);
    CHECK(left_cover.right[0] == 0);
    const Cover right_cover = compute_min_cover(single_edge(5), KonigSide::Right);
    CHECK(right_cover.left[0] == 0);
    CHECK(right_cover.right[0] == 5);
}

TEST_CASE("decompose_check examples") {
    CHECK(decompose_check(g2(), 1) == std::pair<Weight, Weight>{1, 3});
    CHECK(decompose_check(g2(), 3) == std::pair<Weight, Weight>{4, 0});
    CHECK(decompose_check(single_edge(5), 2) == std::pair<Weight, Weight>{2, 3});
    try {
        decompose_check(g2(), 4);
        FAIL("expected HOutOfRange");
    } catch (const MatchError& e) {
        CHECK(e.kind() == ErrorKind::HOutOfRange);
    }
}

TEST_CASE("decomposition identity for every h and both König conventions") {
    std::mt19937_64 rng(21);
    RandomSpec spec;
    spec.max_weight = 8;
    for (int round = 0; round < 200; ++round) {
        const BipartiteGraph g = random_graph(rng, spec);
        const Weight truth = oracle_mwm_exhaustive(g);
        for (Weight h = 1; h <= g.max_weight(); ++h)
            for (KonigSide side : {KonigSide::Left, KonigSide::Right}) {
                const auto [top, rest] = decompose_check(g, h, side);
                CHECK(top + rest == truth);
                // Total weight of G_h and G^Δ_h never exceeds W.
                const BipartiteGraph gh = slice_top(g, h);
                const BipartiteGraph delta = residual_graph(g, compute_min_cover(gh, side));
                CHECK(gh.total_weight() + delta.total_weight() <= g.total_weight());
            }
    }
}

TEST_CASE("peeling progress: levels <= N and residual strictly decreasing") {
    std::mt19937_64 rng(22);
    RandomSpec spec;
    spec.max_left = 15;
    spec.max_right = 15;
    spec.max_nodes = 30;
    spec.max_weight = 12;
    for (int round = 0; round < 200; ++round) {
        const BipartiteGraph g = random_graph(rng, spec);
        const PeelResult r = peel(g);
        CHECK(static_cast<Weight>(r.levels.size()) <= g.max_weight());
        Weight previous = g.total_weight();
        Weight matched = 0;
        for (const PeelLevel& level : r.levels) {
            CHECK(level.touched_edges >= 1);
            CHECK(level.residual_after <= previous - level.touched_edges);
            CHECK(level.residual_after < previous);
            CHECK(level.top_weight >= 1);
            previous = level.residual_after;
            matched += level.matched;
        }
        CHECK(previous == 0);
        CHECK(matched == r.mwm);
        CHECK(r.cover.weight() == r.mwm);
        CHECK(verify_cover(g, r.cover));
    }
}

TEST_CASE("minimum cover agrees with brute-force cover enumeration") {
    std::mt19937_64 rng(23);
    RandomSpec spec;
    spec.max_left = 3;
    spec.max_right = 3;
    spec.max_nodes = 6;
    spec.max_weight = 3;
    for (int round = 0; round < 150; ++round) {
        const BipartiteGraph g = random_graph(rng, spec);
        const Weight mwc = brute_force_min_cover(g);
        CHECK(compute_min_cover(g).weight() == mwc);
        CHECK(compute_min_cover(g, KonigSide::Right).weight() == mwc);
        CHECK(oracle_mwm_exhaustive(g) == mwc);
    }
}

TEST_CASE("compute_mwm agrees with Hungarian up to n = 200") {
    std::mt19937_64 rng(24);
    RandomSpec spec;
    spec.max_left = 100;
    spec.max_right = 100;
    spec.max_nodes = 200;
    spec.max_weight = 30;
    spec.max_edges = 3000;
    for (int round = 0; round < 25; ++round) {
        const BipartiteGraph g = random_graph(rng, spec);
        CHECK(compute_mwm(g) == oracle_hungarian(g).weight);
    }
}
