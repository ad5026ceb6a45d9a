#include "matchdecomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <unordered_set>

#include "matchdecomp/errors.hpp"

namespace matchdecomp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::int64_t to_int(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
    return value;
}

std::string pair_text(std::int64_t x, std::int64_t y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

Instance parse_instance_file(std::string_view text) {
    Instance out;
    bool have_header = false;
    std::size_t header_line = 0;
    std::int64_t left = 0, right = 0, declared = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::int64_t> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        const auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;

        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (tok.size() != 5) throw ParseError(line_no, "header needs 'p bmatch <left> <right> <edges>'");
            if (tok[1] != "bmatch")
                throw ParseError(line_no, "unknown problem type '" + std::string(tok[1]) + "'");
            left = to_int(tok[2], line_no);
            right = to_int(tok[3], line_no);
            declared = to_int(tok[4], line_no);
            if (left < 0 || right < 0 || declared < 0)
                throw ParseError(line_no, "negative count in header");
            have_header = true;
            header_line = line_no;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge before header");
            if (tok.size() != 4) throw ParseError(line_no, "edge needs 'e <x> <y> <weight>'");
            const auto x = to_int(tok[1], line_no);
            const auto y = to_int(tok[2], line_no);
            const auto w = to_int(tok[3], line_no);
            if (x < 1 || x > left || y < 1 || y > right)
                throw MatchError(ErrorKind::IndexOutOfRange,
                                 "line " + std::to_string(line_no) + ": edge " + pair_text(x, y) +
                                     " out of range");
            if (w < 1)
                throw MatchError(ErrorKind::ZeroOrNegativeWeight,
                                 "line " + std::to_string(line_no) + ": edge " + pair_text(x, y) +
                                     " has weight " + std::to_string(w));
            if (!seen.insert((x - 1) * right + (y - 1)).second)
                throw MatchError(ErrorKind::DuplicateEdge, "line " + std::to_string(line_no) +
                                                               ": duplicate edge " + pair_text(x, y));
            edges.push_back({static_cast<Index>(x - 1), static_cast<Index>(y - 1), w});
        } else if (tok[0] == "m") {
            if (!have_header) throw ParseError(line_no, "matching line before header");
            if (tok.size() != 3) throw ParseError(line_no, "matching line needs 'm <x> <y>'");
            const auto x = to_int(tok[1], line_no);
            const auto y = to_int(tok[2], line_no);
            if (x < 1 || x > left || y < 1 || y > right)
                throw MatchError(ErrorKind::IndexOutOfRange,
                                 "line " + std::to_string(line_no) + ": matching pair " +
                                     pair_text(x, y) + " out of range");
            out.matching.emplace_back(static_cast<Index>(x - 1), static_cast<Index>(y - 1));
            out.has_matching = true;
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }

    if (!have_header) throw ParseError(line_no, "missing header");
    if (static_cast<std::int64_t>(edges.size()) != declared)
        throw ParseError(header_line, "header declares " + std::to_string(declared) +
                                          " edges, found " + std::to_string(edges.size()));
    out.graph = build_graph(static_cast<Index>(left), static_cast<Index>(right), std::move(edges));
    return out;
}

BipartiteGraph parse_instance(std::string_view text) {
    return parse_instance_file(text).graph;
}

std::string write_instance(const BipartiteGraph& g, const Matching* m) {
    std::ostringstream os;
    os << "p bmatch " << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << "e " << e.left + 1 << ' ' << e.right + 1 << ' ' << e.weight << '\n';
    if (m)
        for (auto [x, y] : m->pairs) os << "m " << x + 1 << ' ' << y + 1 << '\n';
    return os.str();
}

BipartiteGraph gen_random(Index left, Index right, Index m, Weight max_weight, std::uint64_t seed) {
    if (left < 0 || right < 0 || m < 0)
        throw MatchError(ErrorKind::ConstraintError, "negative generator size");
    if (max_weight < 1) throw MatchError(ErrorKind::ConstraintError, "max weight must be >= 1");
    const std::int64_t grid = static_cast<std::int64_t>(left) * right;
    if (m > grid)
        throw MatchError(ErrorKind::TooManyEdges, std::to_string(m) + " edges requested but only " +
                                                      std::to_string(grid) + " pairs exist");

    std::mt19937_64 rng(seed);
    // Floyd's sampling of m distinct cells.
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::int64_t j = grid - m; j < grid; ++j) {
        const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, j)(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::int64_t> cells(chosen.begin(), chosen.end());
    std::sort(cells.begin(), cells.end());

    std::uniform_int_distribution<Weight> weight(1, max_weight);
    std::vector<Edge> edges;
    edges.reserve(cells.size());
    for (std::int64_t c : cells)
        edges.push_back({static_cast<Index>(c / right), static_cast<Index>(c % right), weight(rng)});
    return build_graph(left, right, std::move(edges));
}

BipartiteGraph reweight_random(const BipartiteGraph& g, Weight max_weight, std::uint64_t seed) {
    if (max_weight < 1) throw MatchError(ErrorKind::ConstraintError, "max weight must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> weight(1, max_weight);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.weight = weight(rng);
    return build_graph(g.left_count(), g.right_count(), std::move(edges));
}

}  // namespace matchdecomp
