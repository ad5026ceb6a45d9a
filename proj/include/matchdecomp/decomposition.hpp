#ifndef MATCHDECOMP_DECOMPOSITION_HPP
#define MATCHDECOMP_DECOMPOSITION_HPP

#include <utility>
#include <vector>

#include "matchdecomp/cardinality.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// One round of peeling: the heaviest residual edges at unit weight.
struct PeelLevel {
    Weight top_weight = 0;        // residual weight of the peeled slice
    Index slice_edges = 0;        // |L|
    Index matched = 0;            // mm of the unit slice
    Index touched_edges = 0;      // live edges whose residual dropped
    Weight residual_after = 0;    // total residual weight after the level
};

struct PeelResult {
    Weight mwm = 0;
    Cover cover;
    std::vector<PeelLevel> levels;
};

/// Runs the peeling loop to completion: repeatedly take the top nonempty
/// residual bucket as a unit-weight graph, match it, add its König cover to
/// the running cover and lower the residuals of every edge it touches.
/// The matched sizes sum to mwm(g) and the running cover ends minimum.
PeelResult peel(const BipartiteGraph& g, KonigSide side = KonigSide::Left);

/// mwm(g).
Weight compute_mwm(const BipartiteGraph& g, KonigSide side = KonigSide::Left);

/// A minimum weight cover of g.
Cover compute_min_cover(const BipartiteGraph& g, KonigSide side = KonigSide::Left);

/// Test support: (mwm(G_h), mwm(G^Δ_h)) where G^Δ_h is built from a minimum
/// cover of G_h. The pair sums to mwm(g). Throws HOutOfRange.
std::pair<Weight, Weight> decompose_check(const BipartiteGraph& g, Weight h,
                                          KonigSide side = KonigSide::Left);

}  // namespace matchdecomp

#endif
