#include "matchdecomp/recovery.hpp"

#include "matchdecomp/decomposition.hpp"
#include "matchdecomp/errors.hpp"

namespace matchdecomp {

DoubledGraph build_doubled_graph(const BipartiteGraph& g, const Cover& d) {
    DoubledGraph h;
    h.left_count = g.left_count();
    const auto nx = static_cast<std::size_t>(g.left_count());
    const auto ny = static_cast<std::size_t>(g.right_count());
    h.in_tight.assign(nx + ny, 0);

    std::vector<std::uint8_t> tight(g.edges().size(), 0);
    for (Index e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (d.left[static_cast<std::size_t>(edge.left)] +
                d.right[static_cast<std::size_t>(edge.right)] ==
            edge.weight) {
            tight[static_cast<std::size_t>(e)] = 1;
            h.in_tight[static_cast<std::size_t>(edge.left)] = 1;
            h.in_tight[nx + static_cast<std::size_t>(edge.right)] = 1;
            ++h.tight_edges;
        }
    }
    for (auto flag : h.in_tight) h.base_nodes += flag;

    // Source ids: x^a = x, y^b = nx + y. Target ids: y^a = y, x^b = ny + x.
    UnitAdjacency& adj = h.adjacency;
    adj.left_count = static_cast<Index>(nx + ny);
    adj.right_count = static_cast<Index>(ny + nx);
    adj.offsets.assign(nx + ny + 1, 0);
    adj.targets.clear();
    for (std::size_t x = 0; x < nx; ++x) {
        for (Index e : g.left_incident(static_cast<Index>(x)))
            if (tight[static_cast<std::size_t>(e)]) adj.targets.push_back(g.edge(e).right);
        if (h.in_tight[x] && d.left[x] == 0) {
            adj.targets.push_back(static_cast<Index>(ny + x));
            ++h.bridges;
        }
        adj.offsets[x + 1] = static_cast<Index>(adj.targets.size());
    }
    for (std::size_t y = 0; y < ny; ++y) {
        for (Index e : g.right_incident(static_cast<Index>(y)))
            if (tight[static_cast<std::size_t>(e)])
                adj.targets.push_back(static_cast<Index>(ny) + g.edge(e).left);
        if (h.in_tight[nx + y] && d.right[y] == 0) {
            adj.targets.push_back(static_cast<Index>(y));
            ++h.bridges;
        }
        adj.offsets[nx + y + 1] = static_cast<Index>(adj.targets.size());
    }
    return h;
}

Recovery recover_matching_detailed(const BipartiteGraph& g, const Cover& d) {
    if (!verify_cover(g, d))
        throw MatchError(ErrorKind::InfeasibleInput, "recovery needs a feasible cover");

    const DoubledGraph h = build_doubled_graph(g, d);
    const CardinalityMatching k = hopcroft_karp(h.adjacency);

    Recovery out;
    out.doubled_nodes = h.node_count();
    out.doubled_edges = h.edge_count();
    out.doubled_matching = k.size;
    if (2 * k.size != h.node_count())
        throw MatchError(ErrorKind::CoverNotOptimal,
                         "doubled tight graph has no perfect matching (" +
                             std::to_string(k.size) + " of " +
                             std::to_string(h.node_count() / 2) + ")");

    // K^a: pairs whose source is some x^a and target some y^a.
    const Index ny = g.right_count();
    std::vector<std::pair<Index, Index>> pairs;
    for (Index x = 0; x < g.left_count(); ++x) {
        const Index t = k.mate_left[static_cast<std::size_t>(x)];
        if (t != kNone && t < ny) pairs.emplace_back(x, t);
    }
    out.matching = make_matching(g, std::move(pairs));
    if (out.matching.weight != d.weight())
        throw MatchError(ErrorKind::CoverNotOptimal,
                         "recovered weight " + std::to_string(out.matching.weight) +
                             " differs from cover weight " + std::to_string(d.weight()));
    return out;
}

Matching recover_matching(const BipartiteGraph& g, const Cover& d) {
    return recover_matching_detailed(g, d).matching;
}

Solution solve(const BipartiteGraph& g, KonigSide side) {
    Solution s;
    s.cover = compute_min_cover(g, side);
    s.matching = recover_matching(g, s.cover);
    s.weight = s.matching.weight;
    return s;
}

}  // namespace matchdecomp
