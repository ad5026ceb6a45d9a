#ifndef MATCHDECOMP_CARDINALITY_HPP
#define MATCHDECOMP_CARDINALITY_HPP

#include <cstdint>
#include <vector>

#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// Compact left-to-right adjacency (CSR) for unit-weight matching.
/// Neighbours of left node x are targets[offsets[x] .. offsets[x+1]).
struct UnitAdjacency {
    Index left_count = 0;
    Index right_count = 0;
    std::vector<Index> offsets = {0};
    std::vector<Index> targets;

    static UnitAdjacency from_graph(const BipartiteGraph& g);
};

struct CardinalityMatching {
    std::vector<Index> mate_left;   // right partner of each left node, or kNone
    std::vector<Index> mate_right;  // left partner of each right node, or kNone
    Index size = 0;
};

/// Hopcroft-Karp. Deterministic: free left nodes are scanned in index order
/// and neighbours in adjacency order.
CardinalityMatching hopcroft_karp(const UnitAdjacency& adj);

/// One extra BFS phase: true if an augmenting path exists.
bool has_augmenting_path(const UnitAdjacency& adj, const CardinalityMatching& m);

/// Which unmatched side seeds the alternating reachability in König's
/// construction. Left: cover = (X unreached) + (Y reached). Right is the
/// mirror image: cover = (Y unreached) + (X reached).
enum class KonigSide { Left, Right };

/// 0/1 labels per node: left labels then right labels.
struct UnitCover {
    std::vector<std::uint8_t> left;
    std::vector<std::uint8_t> right;
    Index weight = 0;
};

/// König cover from a maximum matching. Throws MatchingNotMaximum when the
/// resulting cover weight differs from |m|.
UnitCover konig_cover(const UnitAdjacency& adj, const CardinalityMatching& m,
                      KonigSide side = KonigSide::Left);

/// Graph-level wrappers. Both throw NonUnitWeights on weights other than 1.
Matching max_cardinality_matching(const BipartiteGraph& g);
Cover konig_cover(const BipartiteGraph& g, const Matching& m, KonigSide side = KonigSide::Left);

}  // namespace matchdecomp

#endif
