#ifndef MATCHDECOMP_ORACLE_HPP
#define MATCHDECOMP_ORACLE_HPP

#include "matchdecomp/cavity.hpp"
#include "matchdecomp/exec.hpp"
#include "matchdecomp/graph.hpp"

namespace matchdecomp {

/// Largest edge count the exhaustive enumerator accepts.
inline constexpr Index kExhaustiveEdgeLimit = 40;

/// mwm by enumerating every matching. Throws TooLarge above the edge limit.
Weight oracle_mwm_exhaustive(const BipartiteGraph& g);

struct HungarianResult {
    Matching matching;
    Weight weight = 0;
    /// Dual potentials, shifted to be nonnegative; a minimum weight cover.
    Cover potentials;
};

/// O(k^3) Hungarian method on the k x k matrix (k = max side count), with
/// absent pairs as zero-weight slots. The parallel policy splits the
/// per-step column scan across threads.
HungarianResult oracle_hungarian(const BipartiteGraph& g,
                                 ExecPolicy policy = ExecPolicy::Serial);

enum class OracleKind { Exhaustive, Hungarian };

/// mwm(G - {u}) for every u by independent re-solves.
CavityTable oracle_all_cavity(const BipartiteGraph& g, OracleKind kind = OracleKind::Hungarian,
                              ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace matchdecomp

#endif
