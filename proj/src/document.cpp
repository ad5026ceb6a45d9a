#include "matchdecomp/document.hpp"

#include <charconv>

#include "matchdecomp/errors.hpp"

namespace matchdecomp {

using nlohmann::ordered_json;

namespace {

ordered_json node_values(const std::vector<Weight>& left, const std::vector<Weight>& right) {
    ordered_json out = ordered_json::array();
    for (std::size_t x = 0; x < left.size(); ++x)
        out.push_back({{"node", node_label({Side::Left, static_cast<Index>(x)})}, {"value", left[x]}});
    for (std::size_t y = 0; y < right.size(); ++y)
        out.push_back({{"node", node_label({Side::Right, static_cast<Index>(y)})}, {"value", right[y]}});
    return out;
}

void read_node_values(const ordered_json& list, const BipartiteGraph& g, const char* field,
                      std::vector<Weight>& left, std::vector<Weight>& right) {
    if (!list.is_array()) throw ParseError(0, std::string("'") + field + "' must be an array");
    for (const auto& item : list) {
        if (!item.is_object() || !item.contains("node") || !item.contains("value") ||
            !item["node"].is_string() || !item["value"].is_number_integer())
            throw ParseError(0, std::string("malformed '") + field + "' entry");
        const NodeId node = parse_node_label(item["node"].get<std::string>(), g);
        auto& slot = node.side == Side::Left ? left[static_cast<std::size_t>(node.index)]
                                             : right[static_cast<std::size_t>(node.index)];
        slot = item["value"].get<Weight>();
    }
}

}  // namespace

NodeId parse_node_label(const std::string& label, const BipartiteGraph& g) {
    if (label.size() < 2 || (label[0] != 'x' && label[0] != 'y'))
        throw ParseError(0, "bad node label '" + label + "'");
    const Side side = label[0] == 'x' ? Side::Left : Side::Right;
    Index one_based = 0;
    const char* end = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(label.data() + 1, end, one_based);
    if (ec != std::errc() || ptr != end || one_based < 1 || one_based > g.side_count(side))
        throw ParseError(0, "bad node label '" + label + "'");
    return {side, one_based - 1};
}

ordered_json instance_summary(const BipartiteGraph& g) {
    return {{"left", g.left_count()},
            {"right", g.right_count()},
            {"edges", g.edge_count()},
            {"max_weight", g.max_weight()},
            {"total_weight", g.total_weight()}};
}

ordered_json ResultDocument::to_json() const {
    ordered_json doc;
    doc["command"] = command;
    if (instance) doc["instance"] = *instance;
    if (mwm) doc["mwm"] = *mwm;
    if (matching) {
        ordered_json pairs = ordered_json::array();
        for (auto [x, y] : *matching) pairs.push_back({x + 1, y + 1});
        doc["matching"] = pairs;
    }
    if (cover) doc["cover"] = node_values(cover->left, cover->right);
    if (cavity) doc["cavity"] = node_values(cavity->left, cavity->right);
    if (duality) doc["duality"] = *duality;
    for (const auto& [key, value] : extra.items()) doc[key] = value;
    ordered_json t = ordered_json::object();
    for (const auto& [phase, ms] : timings) t[phase + "_ms"] = ms;
    doc["timings"] = t;
    return doc;
}

ResultDocument ResultDocument::from_json(const ordered_json& doc, const BipartiteGraph& g) {
    if (!doc.is_object()) throw ParseError(0, "result document must be a JSON object");
    ResultDocument out;
    if (doc.contains("command") && doc["command"].is_string()) out.command = doc["command"];
    if (doc.contains("mwm")) {
        if (!doc["mwm"].is_number_integer()) throw ParseError(0, "'mwm' must be an integer");
        out.mwm = doc["mwm"].get<Weight>();
    }
    if (doc.contains("matching")) {
        const auto& list = doc["matching"];
        if (!list.is_array()) throw ParseError(0, "'matching' must be an array");
        std::vector<std::pair<Index, Index>> pairs;
        for (const auto& p : list) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw ParseError(0, "matching entries must be [x, y] integer pairs");
            pairs.emplace_back(p[0].get<Index>() - 1, p[1].get<Index>() - 1);
        }
        out.matching = std::move(pairs);
    }
    if (doc.contains("cover")) {
        Cover c = Cover::zeros(g);
        read_node_values(doc["cover"], g, "cover", c.left, c.right);
        out.cover = std::move(c);
    }
    if (doc.contains("cavity")) {
        CavityTable t;
        t.base = out.mwm.value_or(0);
        t.left.assign(static_cast<std::size_t>(g.left_count()), -1);
        t.right.assign(static_cast<std::size_t>(g.right_count()), -1);
        read_node_values(doc["cavity"], g, "cavity", t.left, t.right);
        out.cavity = std::move(t);
    }
    if (doc.contains("duality") && doc["duality"].is_boolean()) out.duality = doc["duality"].get<bool>();
    return out;
}

}  // namespace matchdecomp
