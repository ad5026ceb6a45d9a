#ifndef MATCHDECOMP_DOCUMENT_HPP
#define MATCHDECOMP_DOCUMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matchdecomp/cavity.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// Structured result written by every CLI subcommand, one JSON object:
///
///   {"command": ..., "instance": {...}, "mwm": 4,
///    "matching": [[1,2],[2,1]],
///    "cover":  [{"node":"x1","value":2}, ...],
///    "cavity": [{"node":"x1","value":2}, ...],
///    "duality": true,
///    "timings": {"<phase>_ms": 0.12, ...}}
///
/// Node labels are 1-based ("x<i>" for the left side, "y<j>" for the
/// right). Absent optional fields are omitted. Key order is fixed.
struct ResultDocument {
    std::string command;
    std::optional<nlohmann::ordered_json> instance;
    std::optional<Weight> mwm;
    std::optional<std::vector<std::pair<Index, Index>>> matching;  // 0-based internally
    std::optional<Cover> cover;
    std::optional<CavityTable> cavity;
    std::optional<bool> duality;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, double>> timings;

    nlohmann::ordered_json to_json() const;

    /// Throws ParseError (line 0) on malformed documents. Cover and cavity
    /// arrays are sized from the listed labels; shapes are checked against a
    /// graph by the caller.
    static ResultDocument from_json(const nlohmann::ordered_json& doc, const BipartiteGraph& g);
};

nlohmann::ordered_json instance_summary(const BipartiteGraph& g);

/// Parses "x3" / "y1" labels against g; throws ParseError on bad labels.
NodeId parse_node_label(const std::string& label, const BipartiteGraph& g);

}  // namespace matchdecomp

#endif
