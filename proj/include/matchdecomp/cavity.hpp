#ifndef MATCHDECOMP_CAVITY_HPP
#define MATCHDECOMP_CAVITY_HPP

#include <cstdint>
#include <vector>

#include "matchdecomp/exec.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// The unfolded graph: node u becomes copies u^1..u^alpha (alpha = heaviest
/// edge at u) and an edge uv of weight beta becomes the beta edges
/// u^i v^(beta+1-i). Copies of one node are contiguous; copy ids are
/// per side, level i of node u is first_copy(u) + i - 1.
class UnfoldedGraph {
   public:
    Index left_copy_count() const { return left_first_.back(); }
    Index right_copy_count() const { return right_first_.back(); }
    Index copy_count() const { return left_copy_count() + right_copy_count(); }
    /// Equals W of the source graph.
    Index copy_edge_count() const { return static_cast<Index>(left_targets_.size()); }

    /// First copy of a node and its run length alpha.
    Index first_copy(NodeId node) const;
    Index alpha(NodeId node) const;

    /// Neighbours of a copy on the opposite side.
    std::span<const Index> neighbours(Side side, Index copy) const;

    /// copy -> (original node, 1-based level).
    NodeId original(Side side, Index copy) const;
    Index level(Side side, Index copy) const;

   private:
    friend UnfoldedGraph unfold(const BipartiteGraph&, ExecPolicy);

    std::vector<Index> left_first_ = {0};
    std::vector<Index> right_first_ = {0};
    std::vector<Index> left_owner_;
    std::vector<Index> right_owner_;
    std::vector<Index> left_offsets_ = {0};
    std::vector<Index> left_targets_;
    std::vector<Index> right_offsets_ = {0};
    std::vector<Index> right_targets_;
};

UnfoldedGraph unfold(const BipartiteGraph& g, ExecPolicy policy = ExecPolicy::Parallel);

/// A matching of the unfolded graph as mate arrays over copies.
struct UnfoldedMatching {
    std::vector<Index> mate_left;
    std::vector<Index> mate_right;
    Index size = 0;
};

/// phi(M): every matched edge of weight beta becomes its beta copy edges.
/// Throws NotAMatching if m is not a matching of g.
UnfoldedMatching unfold_matching(const BipartiteGraph& g, const UnfoldedGraph& u,
                                 const Matching& m);

/// Per-copy flags; 0 when an even-length alternating path starts at the copy.
struct RhoFlags {
    std::vector<std::uint8_t> left;
    std::vector<std::uint8_t> right;
};

/// Multi-source search from the unmatched copies of each side, stepping
/// across an unmatched edge and back along the mate's matched edge. Visited
/// copies are exactly the even-path starts. The two sides are independent;
/// the parallel policy runs them concurrently.
RhoFlags compute_rho(const UnfoldedGraph& u, const UnfoldedMatching& phi_m,
                     ExecPolicy policy = ExecPolicy::Parallel);

struct CavityTable {
    Weight base = 0;  // mwm(G)
    std::vector<Weight> left;
    std::vector<Weight> right;

    Weight operator[](NodeId node) const {
        return node.side == Side::Left ? left[static_cast<std::size_t>(node.index)]
                                       : right[static_cast<std::size_t>(node.index)];
    }

    friend bool operator==(const CavityTable&, const CavityTable&) = default;
};

struct CavityOptions {
    /// Cross-check weight(m) against a fresh compute_mwm. Costs a full solve.
    bool validate = false;
    ExecPolicy policy = ExecPolicy::Parallel;
};

/// mwm(G - {u}) for every node u, given a maximum weight matching m.
/// Throws NotAMatching, and MatchingNotOptimal when validation is on.
CavityTable all_cavity(const BipartiteGraph& g, const Matching& m, CavityOptions options = {});

/// Same, returning the flags too (for invariant checks).
CavityTable all_cavity(const BipartiteGraph& g, const Matching& m, CavityOptions options,
                       RhoFlags* rho_out);

}  // namespace matchdecomp

#endif
