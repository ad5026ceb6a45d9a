#include "matchdecomp/cavity.hpp"

#include <algorithm>
#include <numeric>

#include "matchdecomp/decomposition.hpp"
#include "matchdecomp/errors.hpp"

namespace matchdecomp {

namespace {

inline std::size_t at(Index i) { return static_cast<std::size_t>(i); }

void prefix_sum(std::vector<Index>& v) { std::partial_sum(v.begin(), v.end(), v.begin()); }

// CSR over the copies of one side. `first` / `other_first` give copy runs of
// this side and of the opposite side.
void unfold_side(const BipartiteGraph& g, Side side, const std::vector<Index>& first,
                 const std::vector<Index>& other_first, std::vector<Index>& offsets,
                 std::vector<Index>& targets, bool parallel) {
    const Index count = g.side_count(side);
    const Index copies = first.back();
    offsets.assign(at(copies) + 1, 0);

#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (Index u = 0; u < count; ++u) {
        for (Index e : g.incident({side, u})) {
            const Weight beta = g.edge(e).weight;
            for (Weight i = 0; i < beta; ++i) ++offsets[at(first[at(u)] + static_cast<Index>(i)) + 1];
        }
    }
    prefix_sum(offsets);
    targets.resize(at(offsets.back()));

#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (Index u = 0; u < count; ++u) {
        const Index base = first[at(u)];
        // Cursor per copy of u, private to this iteration.
        std::vector<Index> cursor(offsets.begin() + base, offsets.begin() + first[at(u) + 1]);
        for (Index e : g.incident({side, u})) {
            const Edge& edge = g.edge(e);
            const Index v = side == Side::Left ? edge.right : edge.left;
            const auto beta = static_cast<Index>(edge.weight);
            // u^i -- v^(beta + 1 - i), both 1-based.
            for (Index i = 1; i <= beta; ++i)
                targets[at(cursor[at(i - 1)]++)] = other_first[at(v)] + beta - i;
        }
    }
}

}  // namespace

Index UnfoldedGraph::first_copy(NodeId node) const {
    return node.side == Side::Left ? left_first_[at(node.index)] : right_first_[at(node.index)];
}

Index UnfoldedGraph::alpha(NodeId node) const {
    const auto& first = node.side == Side::Left ? left_first_ : right_first_;
    return first[at(node.index) + 1] - first[at(node.index)];
}

std::span<const Index> UnfoldedGraph::neighbours(Side side, Index copy) const {
    const auto& offsets = side == Side::Left ? left_offsets_ : right_offsets_;
    const auto& targets = side == Side::Left ? left_targets_ : right_targets_;
    return std::span<const Index>(targets).subspan(
        at(offsets[at(copy)]), at(offsets[at(copy) + 1] - offsets[at(copy)]));
}

NodeId UnfoldedGraph::original(Side side, Index copy) const {
    return {side, side == Side::Left ? left_owner_[at(copy)] : right_owner_[at(copy)]};
}

Index UnfoldedGraph::level(Side side, Index copy) const {
    return copy - first_copy(original(side, copy)) + 1;
}

UnfoldedGraph unfold(const BipartiteGraph& g, ExecPolicy policy) {
    const bool parallel = policy == ExecPolicy::Parallel;
    UnfoldedGraph u;
    u.left_first_.assign(at(g.left_count()) + 1, 0);
    u.right_first_.assign(at(g.right_count()) + 1, 0);
    for (const Edge& e : g.edges()) {
        auto& a = u.left_first_[at(e.left) + 1];
        a = std::max(a, static_cast<Index>(e.weight));
        auto& b = u.right_first_[at(e.right) + 1];
        b = std::max(b, static_cast<Index>(e.weight));
    }
    prefix_sum(u.left_first_);
    prefix_sum(u.right_first_);

    u.left_owner_.resize(at(u.left_first_.back()));
    u.right_owner_.resize(at(u.right_first_.back()));
#pragma omp parallel for schedule(static) if (parallel)
    for (Index x = 0; x < g.left_count(); ++x)
        std::fill(u.left_owner_.begin() + u.left_first_[at(x)],
                  u.left_owner_.begin() + u.left_first_[at(x) + 1], x);
#pragma omp parallel for schedule(static) if (parallel)
    for (Index y = 0; y < g.right_count(); ++y)
        std::fill(u.right_owner_.begin() + u.right_first_[at(y)],
                  u.right_owner_.begin() + u.right_first_[at(y) + 1], y);

    unfold_side(g, Side::Left, u.left_first_, u.right_first_, u.left_offsets_, u.left_targets_,
                parallel);
    unfold_side(g, Side::Right, u.right_first_, u.left_first_, u.right_offsets_, u.right_targets_,
                parallel);
    return u;
}

UnfoldedMatching unfold_matching(const BipartiteGraph& g, const UnfoldedGraph& u,
                                 const Matching& m) {
    const Matching checked = make_matching(g, m.pairs);
    UnfoldedMatching phi;
    phi.mate_left.assign(at(u.left_copy_count()), kNone);
    phi.mate_right.assign(at(u.right_copy_count()), kNone);
    for (auto [x, y] : checked.pairs) {
        const auto beta = static_cast<Index>(g.edge(g.find_edge(x, y)).weight);
        const Index fx = u.first_copy({Side::Left, x});
        const Index fy = u.first_copy({Side::Right, y});
        for (Index i = 1; i <= beta; ++i) {
            const Index cx = fx + i - 1;
            const Index cy = fy + beta - i;
            phi.mate_left[at(cx)] = cy;
            phi.mate_right[at(cy)] = cx;
        }
        phi.size += beta;
    }
    return phi;
}

RhoFlags compute_rho(const UnfoldedGraph& u, const UnfoldedMatching& phi_m, ExecPolicy policy) {
    RhoFlags rho;
    auto pass = [&](Side side) {
        const Index copies = side == Side::Left ? u.left_copy_count() : u.right_copy_count();
        const auto& own_mate = side == Side::Left ? phi_m.mate_left : phi_m.mate_right;
        const auto& other_mate = side == Side::Left ? phi_m.mate_right : phi_m.mate_left;
        auto& out = side == Side::Left ? rho.left : rho.right;
        out.assign(at(copies), 1);
        std::vector<Index> queue;
        for (Index c = 0; c < copies; ++c)
            if (own_mate[at(c)] == kNone) {
                out[at(c)] = 0;
                queue.push_back(c);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Index r : u.neighbours(side, queue[head])) {
                const Index w = other_mate[at(r)];
                if (w != kNone && out[at(w)]) {
                    out[at(w)] = 0;
                    queue.push_back(w);
                }
            }
        }
    };

    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel sections
        {
#pragma omp section
            pass(Side::Left);
#pragma omp section
            pass(Side::Right);
        }
    } else {
        pass(Side::Left);
        pass(Side::Right);
    }
    return rho;
}

CavityTable all_cavity(const BipartiteGraph& g, const Matching& m, CavityOptions options) {
    return all_cavity(g, m, options, nullptr);
}

CavityTable all_cavity(const BipartiteGraph& g, const Matching& m, CavityOptions options,
                       RhoFlags* rho_out) {
    const Matching checked = make_matching(g, m.pairs);
    if (options.validate) {
        const Weight best = compute_mwm(g);
        if (checked.weight != best)
            throw MatchError(ErrorKind::MatchingNotOptimal,
                             "matching weight " + std::to_string(checked.weight) +
                                 " but mwm is " + std::to_string(best));
    }

    const UnfoldedGraph u = unfold(g, options.policy);
    const UnfoldedMatching phi = unfold_matching(g, u, checked);
    RhoFlags rho = compute_rho(u, phi, options.policy);

    CavityTable table;
    table.base = checked.weight;
    table.left.resize(at(g.left_count()));
    table.right.resize(at(g.right_count()));
    const bool parallel = options.policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (Index x = 0; x < g.left_count(); ++x) {
        const Index first = u.first_copy({Side::Left, x});
        Weight deficit = 0;
        for (Index c = first; c < first + u.alpha({Side::Left, x}); ++c) deficit += rho.left[at(c)];
        table.left[at(x)] = table.base - deficit;
    }
#pragma omp parallel for schedule(static) if (parallel)
    for (Index y = 0; y < g.right_count(); ++y) {
        const Index first = u.first_copy({Side::Right, y});
        Weight deficit = 0;
        for (Index c = first; c < first + u.alpha({Side::Right, y}); ++c)
            deficit += rho.right[at(c)];
        table.right[at(y)] = table.base - deficit;
    }
    if (rho_out) *rho_out = std::move(rho);
    return table;
}

}  // namespace matchdecomp
