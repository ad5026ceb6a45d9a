#ifndef MATCHDECOMP_GRAPH_HPP
#define MATCHDECOMP_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matchdecomp {

using Weight = std::int64_t;
using Index = std::int32_t;

inline constexpr Index kNone = -1;

enum class Side : std::uint8_t { Left, Right };

struct NodeId {
    Side side;
    Index index;

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// "x3" / "y1" style label, 1-based.
std::string node_label(NodeId node);

struct Edge {
    Index left;
    Index right;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Integer-weighted bipartite graph X = {0..left_count-1},
/// Y = {0..right_count-1}. Immutable once built; construct through
/// build_graph, which enforces positive weights, in-range indices and no
/// parallel edges.
class BipartiteGraph {
   public:
    BipartiteGraph() = default;

    Index left_count() const { return left_count_; }
    Index right_count() const { return right_count_; }
    Index node_count() const { return left_count_ + right_count_; }
    Index edge_count() const { return static_cast<Index>(edges_.size()); }
    Index side_count(Side side) const {
        return side == Side::Left ? left_count_ : right_count_;
    }

    /// Largest edge weight (N); 0 for an edgeless graph.
    Weight max_weight() const { return max_weight_; }
    /// Sum of edge weights (W).
    Weight total_weight() const { return total_weight_; }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(Index id) const { return edges_[static_cast<std::size_t>(id)]; }

    /// Ids of edges incident to a node, in edge-list order.
    std::span<const Index> incident(NodeId node) const;
    std::span<const Index> left_incident(Index x) const { return incident({Side::Left, x}); }
    std::span<const Index> right_incident(Index y) const { return incident({Side::Right, y}); }

    /// Edge id of (x, y) or kNone.
    Index find_edge(Index x, Index y) const;

    /// True if every edge has weight 1.
    bool is_unit() const { return max_weight_ <= 1; }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.left_count_ == b.left_count_ && a.right_count_ == b.right_count_ &&
               a.edges_ == b.edges_;
    }

   private:
    friend BipartiteGraph build_graph(Index, Index, std::vector<Edge>);

    Index left_count_ = 0;
    Index right_count_ = 0;
    Weight max_weight_ = 0;
    Weight total_weight_ = 0;
    std::vector<Edge> edges_;
    // CSR incidence: left nodes occupy [0, left_count), right nodes follow.
    std::vector<Index> offsets_ = {0};
    std::vector<Index> incidence_;
};

/// Validates and indexes an edge list. Throws MatchError with
/// DuplicateEdge, ZeroOrNegativeWeight or IndexOutOfRange.
BipartiteGraph build_graph(Index left_count, Index right_count, std::vector<Edge> edges);

struct Matching {
    std::vector<std::pair<Index, Index>> pairs;
    Weight weight = 0;

    Index size() const { return static_cast<Index>(pairs.size()); }
};

/// Checks that `pairs` are node-disjoint edges of g and computes the weight.
/// Throws MatchError(NotAMatching) otherwise.
Matching make_matching(const BipartiteGraph& g, std::vector<std::pair<Index, Index>> pairs);

/// Nonnegative integer label per node.
struct Cover {
    std::vector<Weight> left;
    std::vector<Weight> right;

    static Cover zeros(const BipartiteGraph& g);

    Weight& operator[](NodeId node) {
        return node.side == Side::Left ? left[static_cast<std::size_t>(node.index)]
                                       : right[static_cast<std::size_t>(node.index)];
    }
    Weight operator[](NodeId node) const {
        return node.side == Side::Left ? left[static_cast<std::size_t>(node.index)]
                                       : right[static_cast<std::size_t>(node.index)];
    }

    Weight weight() const;

    friend bool operator==(const Cover&, const Cover&) = default;
};

/// G_h: edges of weight > N - h, each reweighted to w - (N - h).
/// Throws HOutOfRange unless 1 <= h <= N.
BipartiteGraph slice_top(const BipartiteGraph& g, Weight h);

/// Edges with w(u,v) - c(u) - c(v) > 0, carrying that residual as weight.
BipartiteGraph residual_graph(const BipartiteGraph& g, const Cover& c);

/// g with every edge incident to `node` dropped; index space unchanged.
BipartiteGraph without_node(const BipartiteGraph& g, NodeId node);

bool verify_cover(const BipartiteGraph& g, const Cover& c);

/// True iff weight(m) == weight(c). The equal-weight test and the
/// complementary-slackness test are both evaluated; disagreement raises
/// InternalInconsistency. Throws InfeasibleInput when m is not a matching
/// of g or c is not a cover of g.
bool verify_duality(const BipartiteGraph& g, const Matching& m, const Cover& c);

}  // namespace matchdecomp

#endif
