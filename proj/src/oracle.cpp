#include "matchdecomp/oracle.hpp"

#include <algorithm>
#include <limits>

#include "matchdecomp/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matchdecomp {

namespace {

inline std::size_t at(Index i) { return static_cast<std::size_t>(i); }

class Enumerator {
   public:
    explicit Enumerator(const BipartiteGraph& g)
        : g_(g), used_(at(g.right_count()), 0) {}

    Weight run() {
        visit(0, 0);
        return best_;
    }

   private:
    void visit(Index x, Weight acc) {
        if (x == g_.left_count()) {
            best_ = std::max(best_, acc);
            return;
        }
        visit(x + 1, acc);
        for (Index e : g_.left_incident(x)) {
            const Edge& edge = g_.edge(e);
            auto& used = used_[at(edge.right)];
            if (used) continue;
            used = 1;
            visit(x + 1, acc + edge.weight);
            used = 0;
        }
    }

    const BipartiteGraph& g_;
    std::vector<char> used_;
    Weight best_ = 0;
};

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
constexpr Index kParallelScanMin = 256;

}  // namespace

Weight oracle_mwm_exhaustive(const BipartiteGraph& g) {
    if (g.edge_count() > kExhaustiveEdgeLimit)
        throw MatchError(ErrorKind::TooLarge,
                         "exhaustive oracle limited to " + std::to_string(kExhaustiveEdgeLimit) +
                             " edges, got " + std::to_string(g.edge_count()));
    return Enumerator(g).run();
}

HungarianResult oracle_hungarian(const BipartiteGraph& g, ExecPolicy policy) {
    const Index k = std::max(g.left_count(), g.right_count());
    const auto dim = at(k) + 1;

    // 1-based cost matrix, cost = -weight; row 0 / column 0 unused.
    std::vector<Weight> cost(dim * dim, 0);
    for (const Edge& e : g.edges()) cost[(at(e.left) + 1) * dim + at(e.right) + 1] = -e.weight;

    std::vector<Weight> row_pot(dim, 0), col_pot(dim, 0), min_slack(dim);
    std::vector<Index> row_of(dim, 0), way(dim, 0);
    std::vector<char> used(dim);
    const bool parallel = policy == ExecPolicy::Parallel && k >= kParallelScanMin;

    for (Index i = 1; i <= k; ++i) {
        row_of[0] = i;
        Index j0 = 0;
        std::fill(min_slack.begin(), min_slack.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[at(j0)] = 1;
            const Index i0 = row_of[at(j0)];
            const Weight* row = &cost[at(i0) * dim];
            const Weight pot_i0 = row_pot[at(i0)];
            Weight delta = kInf;
            Index j1 = 0;

#pragma omp parallel if (parallel)
            {
                Weight local_delta = kInf;
                Index local_j = 0;
#pragma omp for schedule(static) nowait
                for (Index j = 1; j <= k; ++j) {
                    if (used[at(j)]) continue;
                    const Weight cur = row[at(j)] - pot_i0 - col_pot[at(j)];
                    if (cur < min_slack[at(j)]) {
                        min_slack[at(j)] = cur;
                        way[at(j)] = j0;
                    }
                    if (min_slack[at(j)] < local_delta) {
                        local_delta = min_slack[at(j)];
                        local_j = j;
                    }
                }
#pragma omp critical
                if (local_j != 0 && (local_delta < delta || (local_delta == delta && local_j < j1))) {
                    delta = local_delta;
                    j1 = local_j;
                }
            }

#pragma omp parallel for schedule(static) if (parallel)
            for (Index j = 0; j <= k; ++j) {
                if (used[at(j)]) {
                    row_pot[at(row_of[at(j)])] += delta;
                    col_pot[at(j)] -= delta;
                } else {
                    min_slack[at(j)] -= delta;
                }
            }
            j0 = j1;
        } while (row_of[at(j0)] != 0);
        do {
            const Index j1 = way[at(j0)];
            row_of[at(j0)] = row_of[at(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    HungarianResult out;
    std::vector<std::pair<Index, Index>> pairs;
    for (Index j = 1; j <= k; ++j) {
        const Index i = row_of[at(j)];
        if (i - 1 < g.left_count() && j - 1 < g.right_count() &&
            cost[at(i) * dim + at(j)] < 0)
            pairs.emplace_back(i - 1, j - 1);
    }
    std::sort(pairs.begin(), pairs.end());
    out.matching = make_matching(g, std::move(pairs));
    out.weight = out.matching.weight;

    // cover(x) = -row_pot, cover(y) = -col_pot, then shift so the smallest
    // row label (padding rows included) is zero.
    Weight shift = kInf;
    for (Index i = 1; i <= k; ++i) shift = std::min(shift, -row_pot[at(i)]);
    if (k == 0) shift = 0;
    out.potentials = Cover::zeros(g);
    for (Index x = 0; x < g.left_count(); ++x) out.potentials.left[at(x)] = -row_pot[at(x) + 1] - shift;
    for (Index y = 0; y < g.right_count(); ++y)
        out.potentials.right[at(y)] = -col_pot[at(y) + 1] + shift;
    return out;
}

CavityTable oracle_all_cavity(const BipartiteGraph& g, OracleKind kind, ExecPolicy policy) {
    auto solve = [kind](const BipartiteGraph& h) {
        return kind == OracleKind::Exhaustive ? oracle_mwm_exhaustive(h)
                                              : oracle_hungarian(h).weight;
    };
    CavityTable table;
    table.base = solve(g);
    table.left.resize(at(g.left_count()));
    table.right.resize(at(g.right_count()));

    const Index n = g.node_count();
    const bool parallel = policy == ExecPolicy::Parallel;
    // Exceptions cannot cross the parallel region; the exhaustive size guard
    // already fired on g itself, so per-node solves cannot throw.
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (Index u = 0; u < n; ++u) {
        const NodeId node = u < g.left_count() ? NodeId{Side::Left, u}
                                               : NodeId{Side::Right, u - g.left_count()};
        const Weight value = solve(without_node(g, node));
        if (node.side == Side::Left)
            table.left[at(node.index)] = value;
        else
            table.right[at(node.index)] = value;
    }
    return table;
}

}  // namespace matchdecomp
