#ifndef MATCHDECOMP_RECOVERY_HPP
#define MATCHDECOMP_RECOVERY_HPP

#include "matchdecomp/cardinality.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// Two copies of the tight subgraph H (edges with w = D(u) + D(v)), joined
/// by bridges u^a u^b at the nodes of H with D(u) = 0.
///
/// Bipartition used for matching: the "source" side is X^a followed by Y^b,
/// the "target" side is Y^a followed by X^b. Copy-a edges run x^a -> y^a,
/// copy-b edges y^b -> x^b, and bridges x^a -> x^b and y^b -> y^a, so every
/// edge crosses the partition.
struct DoubledGraph {
    Index base_nodes = 0;   // |V(H)|
    Index tight_edges = 0;  // |E(H)|
    Index bridges = 0;
    UnitAdjacency adjacency;
    std::vector<std::uint8_t> in_tight;  // per original node (left then right)
    Index left_count = 0;                // |X| of the source graph

    Index node_count() const { return 2 * base_nodes; }
    Index edge_count() const { return 2 * tight_edges + bridges; }
};

DoubledGraph build_doubled_graph(const BipartiteGraph& g, const Cover& d);

struct Recovery {
    Matching matching;
    Index doubled_nodes = 0;
    Index doubled_edges = 0;
    Index doubled_matching = 0;  // |K|; equals doubled_nodes / 2 when perfect
};

/// Matching recovery with the doubled-graph diagnostics attached.
/// Throws InfeasibleInput if d is not a cover, CoverNotOptimal if K is not
/// perfect or the recovered weight differs from weight(d).
Recovery recover_matching_detailed(const BipartiteGraph& g, const Cover& d);

/// A maximum weight matching of g given a minimum weight cover d.
Matching recover_matching(const BipartiteGraph& g, const Cover& d);

struct Solution {
    Matching matching;
    Cover cover;
    Weight weight = 0;
};

/// Minimum cover by peeling, then matching recovery.
Solution solve(const BipartiteGraph& g, KonigSide side = KonigSide::Left);

}  // namespace matchdecomp

#endif
