// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "golden.hpp"
#include "matchdecomp/cardinality.hpp"
#include "matchdecomp/cavity.hpp"
#include "matchdecomp/decomposition.hpp"
#include "matchdecomp/io.hpp"
#include "matchdecomp/oracle.hpp"
#include "matchdecomp/recovery.hpp"
#include "support.hpp"

using namespace matchdecomp;
using namespace matchdecomp::testing;

namespace {

// Pinned tolerances.
constexpr double kExhaustiveBudgetSeconds = 10.0;
constexpr double kHungarianBudgetSeconds = 30.0;
constexpr double kMaxGrowthPerDoubling = 3.0;
constexpr double kMinSpeedup = 5.0;
constexpr int kTimedRuns = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

double median_ms(int runs, const std::function<void()>& body) {
    std::vector<double> ms;
    for (int r = 0; r < runs; ++r) {
        const auto t = Clock::now();
        body();
        ms.push_back(seconds_since(t) * 1000.0);
    }
    std::sort(ms.begin(), ms.end());
    return ms[ms.size() / 2];
}

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Instances shared between criteria.
std::vector<BipartiteGraph> small_instances;
std::vector<BipartiteGraph> medium_instances;

Verdict oracle_exhaustive() {
    std::mt19937_64 rng(1001);
    RandomSpec spec;  // n <= 12, N <= 6
    int mwm_bad = 0, cavity_bad = 0;
    const auto t = Clock::now();
    for (int i = 0; i < 1000; ++i) {
        BipartiteGraph g = random_graph(rng, spec);
        if (compute_mwm(g) != oracle_mwm_exhaustive(g)) ++mwm_bad;
        const Solution s = solve(g);
        if (all_cavity(g, s.matching) != oracle_all_cavity(g, OracleKind::Exhaustive)) ++cavity_bad;
        small_instances.push_back(std::move(g));
    }
    const double secs = seconds_since(t);
    return {mwm_bad == 0 && cavity_bad == 0 && secs < kExhaustiveBudgetSeconds,
            fmt("1000 instances, mwm mismatches %d, cavity mismatches %d, %.2f s (limit %.0f s)",
                mwm_bad, cavity_bad, secs, kExhaustiveBudgetSeconds)};
}

Verdict oracle_hungarian_equivalence() {
    std::mt19937_64 rng(1002);
    RandomSpec spec;
    spec.max_left = 100;
    spec.max_right = 100;
    spec.max_nodes = 200;
    spec.max_weight = 50;
    int mwm_bad = 0, duality_bad = 0;
    const auto t = Clock::now();
    for (int i = 0; i < 200; ++i) {
        BipartiteGraph g = random_graph(rng, spec);
        if (compute_mwm(g) != oracle_hungarian(g).weight) ++mwm_bad;
        const Solution s = solve(g);
        if (!verify_duality(g, s.matching, compute_min_cover(g))) ++duality_bad;
        medium_instances.push_back(std::move(g));
    }
    const double secs = seconds_since(t);
    return {mwm_bad == 0 && duality_bad == 0 && secs < kHungarianBudgetSeconds,
            fmt("200 instances, mwm mismatches %d, duality failures %d, %.2f s (limit %.0f s)",
                mwm_bad, duality_bad, secs, kHungarianBudgetSeconds)};
}

Verdict decomposition_identity() {
    std::mt19937_64 rng(1003);
    RandomSpec spec;
    spec.max_left = 20;
    spec.max_right = 20;
    spec.max_nodes = 40;
    spec.max_weight = 10;
    int bad = 0, checks = 0, exhaustive = 0;
    for (int i = 0; i < 100; ++i) {
        const BipartiteGraph g = random_graph(rng, spec);
        Weight truth;
        if (g.edge_count() <= kExhaustiveEdgeLimit) {
            truth = oracle_mwm_exhaustive(g);
            ++exhaustive;
        } else {
            truth = oracle_hungarian(g).weight;
        }
        for (Weight h = 1; h <= g.max_weight(); ++h)
            for (KonigSide side : {KonigSide::Left, KonigSide::Right}) {
                const auto [top, rest] = decompose_check(g, h, side);
                ++checks;
                if (top + rest != truth) ++bad;
            }
    }
    return {bad == 0, fmt("100 instances (%d by exhaustive oracle), %d (h, side) checks, %d failures",
                          exhaustive, checks, bad)};
}

Verdict recovery_correctness() {
    int bad = 0, count = 0;
    auto check = [&](const BipartiteGraph& g) {
        ++count;
        const Cover d = compute_min_cover(g);
        const Recovery r = recover_matching_detailed(g, d);
        bool ok = 2 * r.doubled_matching == r.doubled_nodes && r.matching.weight == d.weight();
        std::vector<char> lm(static_cast<std::size_t>(g.left_count()), 0);
        std::vector<char> rm(static_cast<std::size_t>(g.right_count()), 0);
        for (auto [x, y] : r.matching.pairs) {
            const Weight w = g.edge(g.find_edge(x, y)).weight;
            ok = ok && w == d.left[static_cast<std::size_t>(x)] + d.right[static_cast<std::size_t>(y)];
            lm[static_cast<std::size_t>(x)] = rm[static_cast<std::size_t>(y)] = 1;
        }
        for (std::size_t x = 0; x < lm.size(); ++x) ok = ok && (d.left[x] == 0 || lm[x]);
        for (std::size_t y = 0; y < rm.size(); ++y) ok = ok && (d.right[y] == 0 || rm[y]);
        if (!ok) ++bad;
    };
    for (const auto& g : small_instances) check(g);
    for (const auto& g : medium_instances) check(g);
    return {bad == 0 && count == 1200, fmt("%d instances, %d failures", count, bad)};
}

Verdict cavity_formula() {
    int node_bad = 0, monotone_bad = 0, nodes = 0;
    for (const auto& g : small_instances) {
        const Solution s = solve(g);
        const UnfoldedGraph u = unfold(g);
        const RhoFlags rho = compute_rho(u, unfold_matching(g, u, s.matching));
        const CavityTable truth = oracle_all_cavity(g, OracleKind::Exhaustive);
        for (Side side : {Side::Left, Side::Right}) {
            const auto& flags = side == Side::Left ? rho.left : rho.right;
            for (Index v = 0; v < g.side_count(side); ++v) {
                ++nodes;
                const Index first = u.first_copy({side, v});
                Weight sum = 0;
                for (Index i = 0; i < u.alpha({side, v}); ++i) {
                    const auto f = flags[static_cast<std::size_t>(first + i)];
                    if (i > 0 && f > flags[static_cast<std::size_t>(first + i - 1)]) ++monotone_bad;
                    sum += f;
                }
                if (sum != truth.base - truth[{side, v}]) ++node_bad;
            }
        }
    }
    return {node_bad == 0 && monotone_bad == 0 && !small_instances.empty(),
            fmt("%d nodes, sum mismatches %d, monotonicity violations %d", nodes, node_bad,
                monotone_bad)};
}

Verdict unfolding_invariants() {
    std::mt19937_64 rng(1006);
    int bad = 0;
    Weight largest = 0;
    for (int i = 0; i < 200; ++i) {
        const auto left = static_cast<Index>(rng() % 30 + 1);
        const auto right = static_cast<Index>(rng() % 30 + 1);
        const auto m = static_cast<Index>(rng() % std::min<Index>(left * right, 120) + 1);
        const Weight n = std::max<Weight>(1, std::min<Weight>(60, 500 / m));
        const BipartiteGraph g = random_sparse(rng, left, right, m, n);
        largest = std::max(largest, g.total_weight());
        const Weight mwm = compute_mwm(g);
        const UnfoldedGraph u = unfold(g);
        const Index mm = max_cardinality_matching(unfolded_as_graph(u)).size();
        const Index phi = unfold_matching(g, u, solve(g).matching).size;
        if (mm != mwm || phi != mwm || g.total_weight() > 500) ++bad;
    }
    return {bad == 0, fmt("200 instances, largest W %lld, %d failures", static_cast<long long>(largest), bad)};
}

Verdict growth_verdict(const std::vector<Weight>& ns, const std::vector<double>& ms,
                       const std::vector<Weight>& ws) {
    Verdict v;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        v.detail += fmt("%sN=%lld W=%lld %.2f ms", i ? ", " : "", static_cast<long long>(ns[i]),
                        static_cast<long long>(ws[i]), ms[i]);
        if (i > 0) {
            const double ratio = ms[i] / ms[i - 1];
            v.detail += fmt(" (x%.2f)", ratio);
            v.pass = v.pass && ratio <= kMaxGrowthPerDoubling;
        }
    }
    v.detail += fmt("; limit x%.1f per doubling", kMaxGrowthPerDoubling);
    return v;
}

Verdict cavity_scaling() {
    const BipartiteGraph topology = gen_random(1000, 1000, 10000, 1, 1007);
    std::vector<Weight> ns = {4, 8, 16, 32}, ws;
    std::vector<double> ms;
    for (Weight n : ns) {
        const BipartiteGraph g = reweight_random(topology, n, 2000 + static_cast<std::uint64_t>(n));
        const Matching m = solve(g).matching;
        all_cavity(g, m);  // warm-up
        ms.push_back(median_ms(kTimedRuns, [&] { all_cavity(g, m); }));
        ws.push_back(g.total_weight());
    }
    return growth_verdict(ns, ms, ws);
}

Verdict runtime_advantage() {
    const BipartiteGraph g = gen_random(2500, 2500, 20000, 8, 1008);
    Weight solver = 0, hungarian = 0;
    const double s = median_ms(kTimedRuns, [&] { solver = compute_mwm(g); });
    const double h = median_ms(kTimedRuns, [&] { hungarian = oracle_hungarian(g).weight; });
    const double speedup = h / s;
    return {solver == hungarian && speedup >= kMinSpeedup,
            fmt("n=5000 m=20000 N=8: solver %.2f ms, Hungarian %.1f ms, speedup x%.1f (need x%.1f), "
                "weights %s",
                s, h, speedup, kMinSpeedup, solver == hungarian ? "agree" : "DISAGREE")};
}

Verdict solver_scaling() {
    const BipartiteGraph topology = gen_random(2500, 2500, 20000, 1, 1009);
    std::vector<Weight> ns = {4, 8, 16, 32}, ws;
    std::vector<double> ms;
    for (Weight n : ns) {
        const BipartiteGraph g = reweight_random(topology, n, 3000 + static_cast<std::uint64_t>(n));
        compute_mwm(g);  // warm-up
        ms.push_back(median_ms(kTimedRuns, [&] { compute_mwm(g); }));
        ws.push_back(g.total_weight());
    }
    return growth_verdict(ns, ms, ws);
}

Verdict cli_contract() {
    const auto outcomes = run_golden_suite(MATCHDECOMP_GOLDEN_DIR);
    Verdict v;
    int failed = 0;
    for (const auto& o : outcomes)
        if (!o.passed) {
            ++failed;
            v.detail += o.name + ": " + o.detail + "; ";
        }
    // The generator's output must survive a parse/write cycle unchanged.
    const std::string gen_text =
        read_file(std::filesystem::path(MATCHDECOMP_GOLDEN_DIR) / "roundtrip_gen" / "expected.out");
    const bool roundtrip = write_instance(parse_instance(gen_text)) == gen_text;
    v.pass = failed == 0 && roundtrip && outcomes.size() >= 15;
    v.detail += fmt("%zu golden cases, %d failed, gen round-trip %s", outcomes.size(), failed,
                    roundtrip ? "exact" : "DIFFERS");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"oracle equivalence, exhaustive", oracle_exhaustive},
        {"oracle equivalence, Hungarian", oracle_hungarian_equivalence},
        {"decomposition identity", decomposition_identity},
        {"recovery correctness", recovery_correctness},
        {"cavity formula", cavity_formula},
        {"unfolding invariants", unfolding_invariants},
        {"cavity runtime scaling", cavity_scaling},
        {"runtime advantage over Hungarian", runtime_advantage},
        {"solver work scaling", solver_scaling},
        {"CLI contract", cli_contract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::printf("%s criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
