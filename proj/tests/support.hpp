// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// Nothing here calls into the solver paths it is used to check.
#ifndef MATCHDECOMP_TESTS_SUPPORT_HPP
#define MATCHDECOMP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "matchdecomp/cavity.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp::testing {

/// X = {x1, x2}, Y = {y1, y2}; edges x1y1:3, x1y2:2, x2y1:2.
inline BipartiteGraph g2() { return build_graph(2, 2, {{0, 0, 3}, {0, 1, 2}, {1, 0, 2}}); }

inline BipartiteGraph single_edge(Weight w) { return build_graph(1, 1, {{0, 0, w}}); }

inline BipartiteGraph complete_unit(Index k) {
    std::vector<Edge> edges;
    for (Index x = 0; x < k; ++x)
        for (Index y = 0; y < k; ++y) edges.push_back({x, y, 1});
    return build_graph(k, k, std::move(edges));
}

struct RandomSpec {
    Index max_left = 6;
    Index max_right = 6;
    Index max_nodes = 12;  // cap on left + right
    Weight max_weight = 6;
    Index max_edges = 1 << 30;
};

/// Side sizes, density and N are all drawn per instance, so empty graphs,
/// isolated nodes and unit-weight graphs all show up.
inline BipartiteGraph random_graph(std::mt19937_64& rng, const RandomSpec& spec) {
    auto pick = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto left = static_cast<Index>(pick(0, spec.max_left));
    const auto right = static_cast<Index>(pick(0, std::min(spec.max_right, spec.max_nodes - left)));
    const Weight n = pick(1, spec.max_weight);
    const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    std::vector<Edge> edges;
    for (Index x = 0; x < left; ++x)
        for (Index y = 0; y < right; ++y)
            if (std::bernoulli_distribution(density)(rng) &&
                static_cast<Index>(edges.size()) < spec.max_edges)
                edges.push_back({x, y, pick(1, n)});
    std::shuffle(edges.begin(), edges.end(), rng);
    return build_graph(left, right, std::move(edges));
}

/// Sparse graph with exactly `edges` distinct pairs.
inline BipartiteGraph random_sparse(std::mt19937_64& rng, Index left, Index right, Index edges,
                                    Weight max_weight) {
    std::vector<std::int64_t> cells(static_cast<std::size_t>(left) * static_cast<std::size_t>(right));
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<std::int64_t>(i);
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(static_cast<std::size_t>(edges));
    std::uniform_int_distribution<Weight> w(1, max_weight);
    std::vector<Edge> out;
    for (auto c : cells) out.push_back({static_cast<Index>(c / right), static_cast<Index>(c % right), w(rng)});
    return build_graph(left, right, std::move(out));
}

/// Minimum cover weight by enumerating every labelling in [0, N]^n.
/// Only for tiny graphs.
inline Weight brute_force_min_cover(const BipartiteGraph& g) {
    const Index n = g.node_count();
    const Weight top = g.max_weight();
    std::vector<Weight> label(static_cast<std::size_t>(n), 0);
    Weight best = -1;
    std::function<void(Index, Weight)> rec = [&](Index i, Weight acc) {
        if (best >= 0 && acc >= best) return;
        if (i == n) {
            for (const Edge& e : g.edges())
                if (label[static_cast<std::size_t>(e.left)] +
                        label[static_cast<std::size_t>(g.left_count() + e.right)] <
                    e.weight)
                    return;
            best = acc;
            return;
        }
        for (Weight v = 0; v <= top; ++v) {
            label[static_cast<std::size_t>(i)] = v;
            rec(i + 1, acc + v);
        }
        label[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
    return best < 0 ? 0 : best;
}

/// rho by enumerating simple alternating paths on the unfolded graph.
/// A copy gets 0 when it is unmatched, or when a path leaving it along its
/// matched edge can alternate back to an unmatched copy of its own side.
inline RhoFlags brute_force_rho(const UnfoldedGraph& u, const UnfoldedMatching& phi) {
    RhoFlags out;
    for (Side side : {Side::Left, Side::Right}) {
        const Side other = side == Side::Left ? Side::Right : Side::Left;
        const auto& own_mate = side == Side::Left ? phi.mate_left : phi.mate_right;
        const auto& other_mate = side == Side::Left ? phi.mate_right : phi.mate_left;
        const Index copies = side == Side::Left ? u.left_copy_count() : u.right_copy_count();
        const Index other_copies = side == Side::Left ? u.right_copy_count() : u.left_copy_count();
        auto& flags = side == Side::Left ? out.left : out.right;
        flags.assign(static_cast<std::size_t>(copies), 1);

        std::vector<char> on_path(static_cast<std::size_t>(copies), 0);
        std::vector<char> other_on_path(static_cast<std::size_t>(other_copies), 0);
        // At `a` (own side), having arrived by an unmatched edge or as start.
        std::function<bool(Index, bool)> walk = [&](Index a, bool started) -> bool {
            const Index b = own_mate[static_cast<std::size_t>(a)];
            if (b == kNone) return started;
            if (other_on_path[static_cast<std::size_t>(b)]) return false;
            on_path[static_cast<std::size_t>(a)] = 1;
            other_on_path[static_cast<std::size_t>(b)] = 1;
            bool found = false;
            for (Index next : u.neighbours(other, b)) {
                if (next == a || on_path[static_cast<std::size_t>(next)]) continue;
                if (other_mate[static_cast<std::size_t>(b)] == next) continue;
                if (walk(next, true)) {
                    found = true;
                    break;
                }
            }
            on_path[static_cast<std::size_t>(a)] = 0;
            other_on_path[static_cast<std::size_t>(b)] = 0;
            return found;
        };
        for (Index c = 0; c < copies; ++c) {
            if (own_mate[static_cast<std::size_t>(c)] == kNone || walk(c, false))
                flags[static_cast<std::size_t>(c)] = 0;
        }
    }
    return out;
}

/// UnfoldedGraph as an ordinary unit-weight graph (for mm checks).
inline BipartiteGraph unfolded_as_graph(const UnfoldedGraph& u) {
    std::vector<Edge> edges;
    for (Index c = 0; c < u.left_copy_count(); ++c)
        for (Index r : u.neighbours(Side::Left, c)) edges.push_back({c, r, 1});
    return build_graph(u.left_copy_count(), u.right_copy_count(), std::move(edges));
}

}  // namespace matchdecomp::testing

#endif
