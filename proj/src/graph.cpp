#include "matchdecomp/graph.hpp"

#include <algorithm>
#include <numeric>

#include "matchdecomp/errors.hpp"

namespace matchdecomp {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::ZeroOrNegativeWeight: return "ZeroOrNegativeWeight";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::HOutOfRange: return "HOutOfRange";
        case ErrorKind::InfeasibleInput: return "InfeasibleInput";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::NonUnitWeights: return "NonUnitWeights";
        case ErrorKind::MatchingNotMaximum: return "MatchingNotMaximum";
        case ErrorKind::CoverNotOptimal: return "CoverNotOptimal";
        case ErrorKind::NotAMatching: return "NotAMatching";
        case ErrorKind::MatchingNotOptimal: return "MatchingNotOptimal";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::TooManyEdges: return "TooManyEdges";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConstraintError: return "ConstraintError";
    }
    return "Unknown";
}

std::string node_label(NodeId node) {
    return (node.side == Side::Left ? "x" : "y") + std::to_string(node.index + 1);
}

std::span<const Index> BipartiteGraph::incident(NodeId node) const {
    const auto slot = static_cast<std::size_t>(
        node.side == Side::Left ? node.index : left_count_ + node.index);
    const auto begin = static_cast<std::size_t>(offsets_[slot]);
    const auto end = static_cast<std::size_t>(offsets_[slot + 1]);
    return std::span<const Index>(incidence_).subspan(begin, end - begin);
}

Index BipartiteGraph::find_edge(Index x, Index y) const {
    if (x < 0 || x >= left_count_ || y < 0 || y >= right_count_) return kNone;
    const auto from_left = left_incident(x);
    const auto from_right = right_incident(y);
    if (from_left.size() <= from_right.size()) {
        for (Index e : from_left)
            if (edge(e).right == y) return e;
    } else {
        for (Index e : from_right)
            if (edge(e).left == x) return e;
    }
    return kNone;
}

BipartiteGraph build_graph(Index left_count, Index right_count, std::vector<Edge> edges) {
    if (left_count < 0 || right_count < 0)
        throw MatchError(ErrorKind::IndexOutOfRange, "negative node count");

    BipartiteGraph g;
    g.left_count_ = left_count;
    g.right_count_ = right_count;

    for (const Edge& e : edges) {
        if (e.left < 0 || e.left >= left_count || e.right < 0 || e.right >= right_count)
            throw MatchError(ErrorKind::IndexOutOfRange,
                             "edge (" + std::to_string(e.left + 1) + "," +
                                 std::to_string(e.right + 1) + ") out of range");
        if (e.weight < 1)
            throw MatchError(ErrorKind::ZeroOrNegativeWeight,
                             "edge (" + std::to_string(e.left + 1) + "," +
                                 std::to_string(e.right + 1) + ") has weight " +
                                 std::to_string(e.weight));
        g.max_weight_ = std::max(g.max_weight_, e.weight);
        g.total_weight_ += e.weight;
    }

    std::vector<std::pair<Index, Index>> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) keys.emplace_back(e.left, e.right);
    std::sort(keys.begin(), keys.end());
    if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end())
        throw MatchError(ErrorKind::DuplicateEdge,
                         "duplicate edge (" + std::to_string(dup->first + 1) + "," +
                             std::to_string(dup->second + 1) + ")");

    const auto slots = static_cast<std::size_t>(left_count) + static_cast<std::size_t>(right_count);
    g.offsets_.assign(slots + 1, 0);
    for (const Edge& e : edges) {
        ++g.offsets_[static_cast<std::size_t>(e.left) + 1];
        ++g.offsets_[static_cast<std::size_t>(left_count + e.right) + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.incidence_.resize(edges.size() * 2);
    std::vector<Index> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        g.incidence_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.left)]++)] =
            static_cast<Index>(id);
        g.incidence_[static_cast<std::size_t>(
            fill[static_cast<std::size_t>(left_count + e.right)]++)] = static_cast<Index>(id);
    }
    g.edges_ = std::move(edges);
    return g;
}

Matching make_matching(const BipartiteGraph& g, std::vector<std::pair<Index, Index>> pairs) {
    std::vector<char> left_used(static_cast<std::size_t>(g.left_count()), 0);
    std::vector<char> right_used(static_cast<std::size_t>(g.right_count()), 0);
    Matching m;
    for (auto [x, y] : pairs) {
        const Index e = g.find_edge(x, y);
        if (e == kNone)
            throw MatchError(ErrorKind::NotAMatching, "pair (" + std::to_string(x + 1) + "," +
                                                          std::to_string(y + 1) +
                                                          ") is not an edge");
        auto& lu = left_used[static_cast<std::size_t>(x)];
        auto& ru = right_used[static_cast<std::size_t>(y)];
        if (lu || ru)
            throw MatchError(ErrorKind::NotAMatching, "pair (" + std::to_string(x + 1) + "," +
                                                          std::to_string(y + 1) +
                                                          ") reuses a matched node");
        lu = ru = 1;
        m.weight += g.edge(e).weight;
    }
    m.pairs = std::move(pairs);
    return m;
}

Cover Cover::zeros(const BipartiteGraph& g) {
    return Cover{std::vector<Weight>(static_cast<std::size_t>(g.left_count()), 0),
                 std::vector<Weight>(static_cast<std::size_t>(g.right_count()), 0)};
}

Weight Cover::weight() const {
    return std::accumulate(left.begin(), left.end(), Weight{0}) +
           std::accumulate(right.begin(), right.end(), Weight{0});
}

BipartiteGraph slice_top(const BipartiteGraph& g, Weight h) {
    if (h < 1 || h > g.max_weight())
        throw MatchError(ErrorKind::HOutOfRange,
                         "h=" + std::to_string(h) + " outside [1," +
                             std::to_string(g.max_weight()) + "]");
    const Weight shift = g.max_weight() - h;
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (e.weight > shift) kept.push_back({e.left, e.right, e.weight - shift});
    return build_graph(g.left_count(), g.right_count(), std::move(kept));
}

BipartiteGraph residual_graph(const BipartiteGraph& g, const Cover& c) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        const Weight r = e.weight - c.left[static_cast<std::size_t>(e.left)] -
                         c.right[static_cast<std::size_t>(e.right)];
        if (r > 0) kept.push_back({e.left, e.right, r});
    }
    return build_graph(g.left_count(), g.right_count(), std::move(kept));
}

BipartiteGraph without_node(const BipartiteGraph& g, NodeId node) {
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        const Index touched = node.side == Side::Left ? e.left : e.right;
        if (touched != node.index) kept.push_back(e);
    }
    return build_graph(g.left_count(), g.right_count(), std::move(kept));
}

bool verify_cover(const BipartiteGraph& g, const Cover& c) {
    if (c.left.size() != static_cast<std::size_t>(g.left_count()) ||
        c.right.size() != static_cast<std::size_t>(g.right_count()))
        return false;
    const auto negative = [](Weight v) { return v < 0; };
    if (std::any_of(c.left.begin(), c.left.end(), negative) ||
        std::any_of(c.right.begin(), c.right.end(), negative))
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return c.left[static_cast<std::size_t>(e.left)] +
                   c.right[static_cast<std::size_t>(e.right)] >=
               e.weight;
    });
}

bool verify_duality(const BipartiteGraph& g, const Matching& m, const Cover& c) {
    Matching checked;
    try {
        checked = make_matching(g, m.pairs);
    } catch (const MatchError& err) {
        throw MatchError(ErrorKind::InfeasibleInput, std::string("matching: ") + err.what());
    }
    if (checked.weight != m.weight)
        throw MatchError(ErrorKind::InfeasibleInput, "matching weight field is stale");
    if (!verify_cover(g, c)) throw MatchError(ErrorKind::InfeasibleInput, "not a cover");

    const bool equal_weight = checked.weight == c.weight();

    // Complementary slackness: matched edges tight, positive-cover nodes matched.
    bool slack_ok = true;
    std::vector<char> left_matched(static_cast<std::size_t>(g.left_count()), 0);
    std::vector<char> right_matched(static_cast<std::size_t>(g.right_count()), 0);
    for (auto [x, y] : checked.pairs) {
        left_matched[static_cast<std::size_t>(x)] = 1;
        right_matched[static_cast<std::size_t>(y)] = 1;
        const Weight w = g.edge(g.find_edge(x, y)).weight;
        if (c.left[static_cast<std::size_t>(x)] + c.right[static_cast<std::size_t>(y)] != w)
            slack_ok = false;
    }
    for (std::size_t i = 0; i < c.left.size(); ++i)
        if (c.left[i] > 0 && !left_matched[i]) slack_ok = false;
    for (std::size_t i = 0; i < c.right.size(); ++i)
        if (c.right[i] > 0 && !right_matched[i]) slack_ok = false;

    if (equal_weight != slack_ok)
        throw MatchError(ErrorKind::InternalInconsistency,
                         "weight equality and complementary slackness disagree");
    return equal_weight;
}

}  // namespace matchdecomp
