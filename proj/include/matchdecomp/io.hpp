#ifndef MATCHDECOMP_IO_HPP
#define MATCHDECOMP_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// Instance file contents. Grammar (1-based indices, whitespace separated):
///
///   c <anything>                      comment
///   p bmatch <left> <right> <edges>   header, exactly once, before e/m lines
///   e <x> <y> <weight>                one per edge, exactly <edges> of them
///   m <x> <y>                         optional matching pairs
///
/// Blank lines are ignored.
struct Instance {
    BipartiteGraph graph;
    std::vector<std::pair<Index, Index>> matching;  // 0-based pairs from "m" lines
    bool has_matching = false;
};

/// Throws ParseError(line, reason) on grammar violations and MatchError
/// with the build_graph kinds (ZeroOrNegativeWeight, IndexOutOfRange,
/// DuplicateEdge) on constraint violations.
Instance parse_instance_file(std::string_view text);

/// Graph part of an instance file; matching lines are checked but dropped.
BipartiteGraph parse_instance(std::string_view text);

/// Canonical text form; parse_instance(write_instance(g)) == g.
std::string write_instance(const BipartiteGraph& g, const Matching* m = nullptr);

/// m distinct edges sampled uniformly from the left x right grid, weights
/// uniform on [1, max_weight]. Same seed, same graph. Throws TooManyEdges
/// when m > left * right and ConstraintError on nonpositive max_weight.
BipartiteGraph gen_random(Index left, Index right, Index m, Weight max_weight,
                          std::uint64_t seed);

/// Same topology, weights redrawn uniformly on [1, max_weight].
BipartiteGraph reweight_random(const BipartiteGraph& g, Weight max_weight, std::uint64_t seed);

}  // namespace matchdecomp

#endif
