#include "matchdecomp/cardinality.hpp"

#include <limits>
#include <numeric>

#include "matchdecomp/errors.hpp"

namespace matchdecomp {

namespace {

constexpr Index kUnreached = std::numeric_limits<Index>::max();

void require_unit(const BipartiteGraph& g) {
    if (!g.is_unit())
        throw MatchError(ErrorKind::NonUnitWeights,
                         "cardinality matching needs unit weights, found weight " +
                             std::to_string(g.max_weight()));
}

// Right-to-left transpose of a CSR adjacency.
UnitAdjacency transpose(const UnitAdjacency& adj) {
    UnitAdjacency t;
    t.left_count = adj.right_count;
    t.right_count = adj.left_count;
    t.offsets.assign(static_cast<std::size_t>(adj.right_count) + 1, 0);
    for (Index v : adj.targets) ++t.offsets[static_cast<std::size_t>(v) + 1];
    std::partial_sum(t.offsets.begin(), t.offsets.end(), t.offsets.begin());
    t.targets.resize(adj.targets.size());
    std::vector<Index> fill(t.offsets.begin(), t.offsets.end() - 1);
    for (Index x = 0; x < adj.left_count; ++x)
        for (Index k = adj.offsets[static_cast<std::size_t>(x)];
             k < adj.offsets[static_cast<std::size_t>(x) + 1]; ++k) {
            const Index v = adj.targets[static_cast<std::size_t>(k)];
            t.targets[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = x;
        }
    return t;
}

// Alternating reachability from the free nodes of the adjacency's left side.
std::vector<std::uint8_t> reach_from_free(const UnitAdjacency& adj,
                                          const std::vector<Index>& mate_of_source,
                                          const std::vector<Index>& mate_of_target,
                                          std::vector<std::uint8_t>& target_reached) {
    std::vector<std::uint8_t> reached(static_cast<std::size_t>(adj.left_count), 0);
    target_reached.assign(static_cast<std::size_t>(adj.right_count), 0);
    std::vector<Index> queue;
    for (Index x = 0; x < adj.left_count; ++x)
        if (mate_of_source[static_cast<std::size_t>(x)] == kNone) {
            reached[static_cast<std::size_t>(x)] = 1;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Index x = queue[head];
        for (Index k = adj.offsets[static_cast<std::size_t>(x)];
             k < adj.offsets[static_cast<std::size_t>(x) + 1]; ++k) {
            const Index v = adj.targets[static_cast<std::size_t>(k)];
            if (target_reached[static_cast<std::size_t>(v)]) continue;
            target_reached[static_cast<std::size_t>(v)] = 1;
            const Index w = mate_of_target[static_cast<std::size_t>(v)];
            if (w != kNone && !reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return reached;
}

}  // namespace

UnitAdjacency UnitAdjacency::from_graph(const BipartiteGraph& g) {
    UnitAdjacency adj;
    adj.left_count = g.left_count();
    adj.right_count = g.right_count();
    adj.offsets.assign(static_cast<std::size_t>(g.left_count()) + 1, 0);
    adj.targets.reserve(static_cast<std::size_t>(g.edge_count()));
    for (Index x = 0; x < g.left_count(); ++x) {
        for (Index e : g.left_incident(x)) adj.targets.push_back(g.edge(e).right);
        adj.offsets[static_cast<std::size_t>(x) + 1] = static_cast<Index>(adj.targets.size());
    }
    return adj;
}

CardinalityMatching hopcroft_karp(const UnitAdjacency& adj) {
    const auto nl = static_cast<std::size_t>(adj.left_count);
    CardinalityMatching m;
    m.mate_left.assign(nl, kNone);
    m.mate_right.assign(static_cast<std::size_t>(adj.right_count), kNone);

    std::vector<Index> dist(nl);
    std::vector<Index> cursor(nl);
    std::vector<Index> queue;
    std::vector<Index> stack;
    queue.reserve(nl);

    for (;;) {
        // BFS layering from all free left nodes.
        queue.clear();
        for (std::size_t x = 0; x < nl; ++x) {
            if (m.mate_left[x] == kNone) {
                dist[x] = 0;
                queue.push_back(static_cast<Index>(x));
            } else {
                dist[x] = kUnreached;
            }
        }
        bool found = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Index x = queue[head];
            for (Index k = adj.offsets[static_cast<std::size_t>(x)];
                 k < adj.offsets[static_cast<std::size_t>(x) + 1]; ++k) {
                const Index w = m.mate_right[static_cast<std::size_t>(adj.targets[static_cast<std::size_t>(k)])];
                if (w == kNone) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(w)] == kUnreached) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (!found) break;

        // Layered DFS, iterative.
        for (std::size_t x = 0; x < nl; ++x) cursor[x] = adj.offsets[x];
        for (Index root = 0; root < adj.left_count; ++root) {
            if (m.mate_left[static_cast<std::size_t>(root)] != kNone ||
                dist[static_cast<std::size_t>(root)] != 0)
                continue;
            stack.assign(1, root);
            while (!stack.empty()) {
                const Index x = stack.back();
                auto& at = cursor[static_cast<std::size_t>(x)];
                if (at == adj.offsets[static_cast<std::size_t>(x) + 1]) {
                    dist[static_cast<std::size_t>(x)] = kUnreached;
                    stack.pop_back();
                    continue;
                }
                const Index v = adj.targets[static_cast<std::size_t>(at++)];
                const Index w = m.mate_right[static_cast<std::size_t>(v)];
                if (w == kNone) {
                    for (Index xi : stack) {
                        const Index vi = adj.targets[static_cast<std::size_t>(
                            cursor[static_cast<std::size_t>(xi)] - 1)];
                        m.mate_left[static_cast<std::size_t>(xi)] = vi;
                        m.mate_right[static_cast<std::size_t>(vi)] = xi;
                    }
                    ++m.size;
                    break;
                }
                if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(x)] + 1)
                    stack.push_back(w);
            }
        }
    }
    return m;
}

bool has_augmenting_path(const UnitAdjacency& adj, const CardinalityMatching& m) {
    std::vector<std::uint8_t> right_reached;
    reach_from_free(adj, m.mate_left, m.mate_right, right_reached);
    for (std::size_t v = 0; v < right_reached.size(); ++v)
        if (right_reached[v] && m.mate_right[v] == kNone) return true;
    return false;
}

UnitCover konig_cover(const UnitAdjacency& adj, const CardinalityMatching& m, KonigSide side) {
    UnitCover cover;
    if (side == KonigSide::Left) {
        std::vector<std::uint8_t> right_reached;
        const auto left_reached = reach_from_free(adj, m.mate_left, m.mate_right, right_reached);
        cover.left.resize(left_reached.size());
        for (std::size_t x = 0; x < left_reached.size(); ++x) cover.left[x] = left_reached[x] ? 0 : 1;
        cover.right = std::move(right_reached);
    } else {
        const UnitAdjacency back = transpose(adj);
        std::vector<std::uint8_t> left_reached;
        const auto right_reached = reach_from_free(back, m.mate_right, m.mate_left, left_reached);
        cover.right.resize(right_reached.size());
        for (std::size_t y = 0; y < right_reached.size(); ++y)
            cover.right[y] = right_reached[y] ? 0 : 1;
        cover.left = std::move(left_reached);
    }
    cover.weight = std::accumulate(cover.left.begin(), cover.left.end(), Index{0}) +
                   std::accumulate(cover.right.begin(), cover.right.end(), Index{0});
    if (cover.weight != m.size)
        throw MatchError(ErrorKind::MatchingNotMaximum,
                         "König cover has weight " + std::to_string(cover.weight) +
                             " but matching has size " + std::to_string(m.size));
    return cover;
}

Matching max_cardinality_matching(const BipartiteGraph& g) {
    require_unit(g);
    const CardinalityMatching cm = hopcroft_karp(UnitAdjacency::from_graph(g));
    Matching m;
    for (Index x = 0; x < g.left_count(); ++x)
        if (const Index y = cm.mate_left[static_cast<std::size_t>(x)]; y != kNone)
            m.pairs.emplace_back(x, y);
    m.weight = cm.size;
    return m;
}

Cover konig_cover(const BipartiteGraph& g, const Matching& m, KonigSide side) {
    require_unit(g);
    const Matching checked = make_matching(g, m.pairs);
    CardinalityMatching cm;
    cm.mate_left.assign(static_cast<std::size_t>(g.left_count()), kNone);
    cm.mate_right.assign(static_cast<std::size_t>(g.right_count()), kNone);
    for (auto [x, y] : checked.pairs) {
        cm.mate_left[static_cast<std::size_t>(x)] = y;
        cm.mate_right[static_cast<std::size_t>(y)] = x;
    }
    cm.size = checked.size();
    const UnitCover unit = konig_cover(UnitAdjacency::from_graph(g), cm, side);
    Cover c = Cover::zeros(g);
    for (std::size_t x = 0; x < unit.left.size(); ++x) c.left[x] = unit.left[x];
    for (std::size_t y = 0; y < unit.right.size(); ++y) c.right[y] = unit.right[y];
    return c;
}

}  // namespace matchdecomp
