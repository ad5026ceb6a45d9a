#include "matchdecomp/decomposition.hpp"

#include <algorithm>

#include "matchdecomp/bucket_queue.hpp"

namespace matchdecomp {

namespace {

// Residual state shared across levels. Edges never leave the arena; an edge
// is live while its residual is positive and it then sits in the bucket of
// its residual.
class Peeler {
   public:
    Peeler(const BipartiteGraph& g, KonigSide side)
        : g_(g),
          side_(side),
          queue_(g.edge_count(), g.max_weight()),
          residual_(g.edges().size()),
          live_(static_cast<std::size_t>(g.node_count())),
          local_(static_cast<std::size_t>(g.node_count()), kNone) {
        for (Index e = 0; e < g.edge_count(); ++e) {
            residual_[static_cast<std::size_t>(e)] = g.edge(e).weight;
            queue_.insert(e, g.edge(e).weight);
        }
        for (Index x = 0; x < g.left_count(); ++x) {
            auto span = g.left_incident(x);
            live_[static_cast<std::size_t>(x)].assign(span.begin(), span.end());
        }
        for (Index y = 0; y < g.right_count(); ++y) {
            auto span = g.right_incident(y);
            live_[static_cast<std::size_t>(g.left_count() + y)].assign(span.begin(), span.end());
        }
        result_.cover = Cover::zeros(g);
        residual_total_ = g.total_weight();
    }

    PeelResult run() {
        while (const Weight top = queue_.top_key()) step(top);
        return std::move(result_);
    }

   private:
    void step(Weight top) {
        PeelLevel level;
        level.top_weight = top;

        // The current unit slice, ordered by (left index, edge id) so that
        // local left ids follow global index order.
        auto bucket = queue_.bucket(top);
        slice_.assign(bucket.begin(), bucket.end());
        std::sort(slice_.begin(), slice_.end(), [&](Index a, Index b) {
            const Index la = g_.edge(a).left, lb = g_.edge(b).left;
            return la != lb ? la < lb : a < b;
        });
        level.slice_edges = static_cast<Index>(slice_.size());

        left_nodes_.clear();
        right_nodes_.clear();
        for (Index e : slice_) {
            const Edge& edge = g_.edge(e);
            auto& lx = local_[static_cast<std::size_t>(edge.left)];
            if (lx == kNone) {
                lx = static_cast<Index>(left_nodes_.size());
                left_nodes_.push_back(edge.left);
            }
            auto& ly = local_[static_cast<std::size_t>(g_.left_count() + edge.right)];
            if (ly == kNone) {
                ly = static_cast<Index>(right_nodes_.size());
                right_nodes_.push_back(edge.right);
            }
        }

        UnitAdjacency adj;
        adj.left_count = static_cast<Index>(left_nodes_.size());
        adj.right_count = static_cast<Index>(right_nodes_.size());
        adj.offsets.assign(left_nodes_.size() + 1, 0);
        adj.targets.reserve(slice_.size());
        for (Index e : slice_) {
            const Edge& edge = g_.edge(e);
            ++adj.offsets[static_cast<std::size_t>(local_[static_cast<std::size_t>(edge.left)]) + 1];
            adj.targets.push_back(local_[static_cast<std::size_t>(g_.left_count() + edge.right)]);
        }
        for (std::size_t i = 1; i < adj.offsets.size(); ++i) adj.offsets[i] += adj.offsets[i - 1];

        const CardinalityMatching matching = hopcroft_karp(adj);
        const UnitCover unit = konig_cover(adj, matching, side_);
        level.matched = matching.size;
        result_.mwm += matching.size;

        for (Index x : left_nodes_) local_[static_cast<std::size_t>(x)] = kNone;
        for (Index y : right_nodes_) local_[static_cast<std::size_t>(g_.left_count() + y)] = kNone;

        for (std::size_t i = 0; i < left_nodes_.size(); ++i)
            if (unit.left[i]) {
                ++result_.cover.left[static_cast<std::size_t>(left_nodes_[i])];
                level.touched_edges += lower(left_nodes_[i]);
            }
        for (std::size_t i = 0; i < right_nodes_.size(); ++i)
            if (unit.right[i]) {
                ++result_.cover.right[static_cast<std::size_t>(right_nodes_[i])];
                level.touched_edges += lower(g_.left_count() + right_nodes_[i]);
            }

        level.residual_after = residual_total_;
        result_.levels.push_back(level);
    }

    // Decrements every live edge at a node (slot in the joint index space),
    // pruning dead ones from its list as they are met.
    Index lower(Index slot) {
        auto& edges = live_[static_cast<std::size_t>(slot)];
        Index touched = 0;
        for (std::size_t i = 0; i < edges.size();) {
            const Index e = edges[i];
            auto& r = residual_[static_cast<std::size_t>(e)];
            if (r > 0) {
                --r;
                --residual_total_;
                ++touched;
                queue_.rekey(e, r);
            }
            if (r == 0) {
                edges[i] = edges.back();
                edges.pop_back();
            } else {
                ++i;
            }
        }
        return touched;
    }

    const BipartiteGraph& g_;
    KonigSide side_;
    BucketQueue queue_;
    std::vector<Weight> residual_;
    std::vector<std::vector<Index>> live_;
    std::vector<Index> local_;
    std::vector<Index> slice_;
    std::vector<Index> left_nodes_;
    std::vector<Index> right_nodes_;
    Weight residual_total_ = 0;
    PeelResult result_;
};

}  // namespace

PeelResult peel(const BipartiteGraph& g, KonigSide side) { return Peeler(g, side).run(); }

Weight compute_mwm(const BipartiteGraph& g, KonigSide side) { return peel(g, side).mwm; }

Cover compute_min_cover(const BipartiteGraph& g, KonigSide side) {
    return peel(g, side).cover;
}

std::pair<Weight, Weight> decompose_check(const BipartiteGraph& g, Weight h, KonigSide side) {
    const BipartiteGraph top = slice_top(g, h);
    const PeelResult top_solution = peel(top, side);
    const BipartiteGraph rest = residual_graph(g, top_solution.cover);
    return {top_solution.mwm, compute_mwm(rest, side)};
}

}  // namespace matchdecomp
