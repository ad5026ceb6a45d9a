#include "matchdecomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "matchdecomp/cavity.hpp"
#include "matchdecomp/decomposition.hpp"
#include "matchdecomp/document.hpp"
#include "matchdecomp/errors.hpp"
#include "matchdecomp/exec.hpp"
#include "matchdecomp/io.hpp"
#include "matchdecomp/oracle.hpp"
#include "matchdecomp/recovery.hpp"

namespace matchdecomp {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Options {
    std::string input = "-";
    std::string output;
    std::string result;
    bool validate = false;
    std::string oracle = "hungarian";
    std::uint64_t seed = 1;
    std::string nodes = "10";
    Index edges = 30;
    Weight max_weight = 5;
    int repeat = 3;
};


int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
            return kExitParse;
        case ErrorKind::MatchingNotOptimal:
        case ErrorKind::CoverNotOptimal:
        case ErrorKind::MatchingNotMaximum:
            return kExitValidation;
        case ErrorKind::InternalInconsistency:
            return kExitUsage;
        default:
            return kExitConstraint;
    }
}

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

class Runner {
   public:
    Runner(const Options& opt, std::istream& in, std::ostream& out)
        : opt_(opt), in_(in), out_(out) {}

    int mwm() {
        const Instance inst = load();
        auto t = Clock::now();
        const PeelResult r = peel(inst.graph);
        doc_.timings.emplace_back("solve", ms_since(t));
        doc_.mwm = r.mwm;
        doc_.extra["levels"] = r.levels.size();
        return emit();
    }

    int cover() {
        const Instance inst = load();
        auto t = Clock::now();
        Cover c = compute_min_cover(inst.graph);
        doc_.timings.emplace_back("solve", ms_since(t));
        doc_.mwm = c.weight();
        doc_.cover = std::move(c);
        return emit();
    }

    int match() {
        const Instance inst = load();
        auto t = Clock::now();
        Cover c = compute_min_cover(inst.graph);
        doc_.timings.emplace_back("cover", ms_since(t));
        t = Clock::now();
        Matching m = recover_matching(inst.graph, c);
        doc_.timings.emplace_back("recover", ms_since(t));
        doc_.mwm = m.weight;
        doc_.duality = verify_duality(inst.graph, m, c);
        doc_.matching = m.pairs;
        doc_.cover = std::move(c);
        bool ok = *doc_.duality;
        if (opt_.validate) {
            t = Clock::now();
            const Weight expected = oracle_hungarian(inst.graph).weight;
            doc_.timings.emplace_back("validate", ms_since(t));
            doc_.extra["validated"] = expected == m.weight;
            ok = ok && expected == m.weight;
        }
        const int code = emit();
        return ok ? code : kExitValidation;
    }

    int cavity() {
        const Instance inst = load();
        Matching m;
        auto t = Clock::now();
        if (inst.has_matching) {
            m = make_matching(inst.graph, inst.matching);
        } else {
            m = solve(inst.graph).matching;
            doc_.timings.emplace_back("solve", ms_since(t));
        }
        t = Clock::now();
        CavityTable table = all_cavity(inst.graph, m, {.validate = opt_.validate});
        doc_.timings.emplace_back("cavity", ms_since(t));
        doc_.mwm = table.base;
        doc_.matching = m.pairs;
        doc_.cavity = std::move(table);
        return emit();
    }

    int verify() {
        const Instance inst = load();
        const BipartiteGraph& g = inst.graph;
        if (opt_.result.empty()) throw std::invalid_argument("verify needs --result FILE");
        ordered_json raw;
        try {
            raw = ordered_json::parse(read_all(opt_.result, in_));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, std::string("result document: ") + e.what());
        }
        const ResultDocument claimed = ResultDocument::from_json(raw, g);

        auto t = Clock::now();
        const OracleKind kind =
            opt_.oracle == "exhaustive" ? OracleKind::Exhaustive : OracleKind::Hungarian;
        const Weight expected = kind == OracleKind::Exhaustive ? oracle_mwm_exhaustive(g)
                                                               : oracle_hungarian(g).weight;
        ordered_json checks = ordered_json::array();
        bool all_ok = true;
        auto record = [&](const std::string& name, bool ok, ordered_json detail) {
            ordered_json c = {{"check", name}, {"ok", ok}};
            for (auto& [k, v] : detail.items()) c[k] = v;
            checks.push_back(c);
            all_ok = all_ok && ok;
        };

        if (claimed.mwm)
            record("mwm", *claimed.mwm == expected, {{"expected", expected}, {"found", *claimed.mwm}});
        else
            record("mwm", false, {{"reason", "missing"}});
        if (claimed.matching) {
            try {
                const Matching m = make_matching(g, *claimed.matching);
                record("matching", m.weight == expected, {{"weight", m.weight}});
            } catch (const MatchError& e) {
                record("matching", false, {{"reason", e.what()}});
            }
        }
        if (claimed.cover) {
            const bool feasible = verify_cover(g, *claimed.cover);
            record("cover", feasible && claimed.cover->weight() == expected,
                   {{"feasible", feasible}, {"weight", claimed.cover->weight()}});
        }
        if (claimed.cavity) {
            const CavityTable truth = oracle_all_cavity(g, kind);
            const bool same = truth.left == claimed.cavity->left && truth.right == claimed.cavity->right;
            record("cavity", same, ordered_json::object());
        }
        doc_.timings.emplace_back("verify", ms_since(t));
        doc_.mwm = expected;
        doc_.extra["oracle"] = opt_.oracle;
        doc_.extra["verified"] = all_ok;
        doc_.extra["checks"] = checks;
        const int code = emit();
        return all_ok ? code : kExitValidation;
    }

    int gen() {
        const auto [left, right] = parse_nodes(opt_.nodes);
        const BipartiteGraph g = gen_random(left, right, opt_.edges, opt_.max_weight, opt_.seed);
        write(write_instance(g));
        return kExitOk;
    }

    int bench() {
        if (const char* env = std::getenv("MATCHDECOMP_THREADS")) {
            const int cap = std::atoi(env);
            if (cap > 0) set_max_threads(cap);
        }
        const auto [left, right] = parse_nodes(opt_.nodes);
        struct Cell {
            Index edges;
            Weight max_weight;
            ordered_json row;
        };
        std::vector<Cell> cells;
        for (int shift : {2, 1, 0}) {
            const Index m = std::max<Index>(1, opt_.edges >> shift);
            for (Weight n = 1; n <= opt_.max_weight; n *= 2) cells.push_back({m, n, {}});
        }

        auto median = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        const int repeat = std::max(1, opt_.repeat);
        const auto wall = Clock::now();
        bool all_agree = true;
#pragma omp parallel for schedule(dynamic, 1) reduction(&& : all_agree)
        for (std::size_t i = 0; i < cells.size(); ++i) {
            Cell& cell = cells[i];
            try {
                const BipartiteGraph g = gen_random(left, right, cell.edges, cell.max_weight,
                                                    opt_.seed + i);
                std::vector<double> solver_ms, hungarian_ms;
                Weight solver = 0, hungarian = 0;
                for (int r = 0; r < repeat; ++r) {
                    auto t = Clock::now();
                    solver = compute_mwm(g);
                    solver_ms.push_back(ms_since(t));
                    t = Clock::now();
                    hungarian = oracle_hungarian(g).weight;
                    hungarian_ms.push_back(ms_since(t));
                }
                const double s = median(solver_ms), h = median(hungarian_ms);
                cell.row = {{"left", left},
                            {"right", right},
                            {"edges", g.edge_count()},
                            {"max_weight", g.max_weight()},
                            {"total_weight", g.total_weight()},
                            {"w_over_n", g.max_weight() ? static_cast<double>(g.total_weight()) /
                                                              static_cast<double>(g.max_weight())
                                                        : 0.0},
                            {"solver_ms", s},
                            {"hungarian_ms", h},
                            {"speedup", s > 0 ? h / s : 0.0},
                            {"agree", solver == hungarian}};
                all_agree = all_agree && solver == hungarian;
            } catch (const std::exception& e) {
                cell.row = {{"error", e.what()}};
                all_agree = false;
            }
        }
        ordered_json rows = ordered_json::array();
        for (const Cell& c : cells) rows.push_back(c.row);
        doc_.timings.emplace_back("bench", ms_since(wall));
        doc_.extra["threads"] = max_threads();
        doc_.extra["repeat"] = repeat;
        doc_.extra["all_agree"] = all_agree;
        doc_.extra["bench"] = rows;
        const int code = emit();
        return all_agree ? code : kExitValidation;
    }

    ResultDocument& doc() { return doc_; }

   private:
    static std::pair<Index, Index> parse_nodes(const std::string& text) {
        const auto comma = text.find(',');
        try {
            if (comma == std::string::npos) {
                const Index n = std::stoi(text);
                return {n, n};
            }
            return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
        } catch (const std::exception&) {
            throw std::invalid_argument("--nodes expects L or L,R");
        }
    }

    Instance load() {
        auto t = Clock::now();
        Instance inst = parse_instance_file(read_all(opt_.input, in_));
        doc_.timings.emplace_back("parse", ms_since(t));
        doc_.instance = instance_summary(inst.graph);
        return inst;
    }

    void write(const std::string& text) {
        if (opt_.output.empty()) {
            out_ << text;
        } else {
            std::ofstream file(opt_.output, std::ios::binary);
            if (!file) throw std::runtime_error("cannot write '" + opt_.output + "'");
            file << text;
        }
    }

    int emit() {
        write(doc_.to_json().dump(2) + "\n");
        return kExitOk;
    }

    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    ResultDocument doc_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Options opt;
    CLI::App app{"Maximum weight bipartite matching by heaviest-slice decomposition"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "Instance file, '-' for stdin");
        sub->add_option("--output,-o", opt.output, "Write the document here instead of stdout");
    };
    auto* mwm = app.add_subcommand("mwm", "Maximum matching weight");
    auto* cover = app.add_subcommand("cover", "Minimum weight cover");
    auto* match = app.add_subcommand("match", "Maximum weight matching with its dual cover");
    auto* cavity = app.add_subcommand("cavity", "mwm(G - {u}) for every node u");
    auto* verify = app.add_subcommand("verify", "Re-check a result document against an instance");
    auto* gen = app.add_subcommand("gen", "Random instance generator");
    auto* bench = app.add_subcommand("bench", "Decomposition solver vs Hungarian over a grid");
    for (auto* sub : {mwm, cover, match, cavity, verify}) add_io(sub);
    match->add_flag("--validate", opt.validate, "Cross-check against the Hungarian oracle");
    cavity->add_flag("--validate", opt.validate, "Check that the matching is maximum first");
    verify->add_option("--result,-r", opt.result, "Result document to check")->required();
    verify->add_option("--oracle", opt.oracle, "Reference solver")
        ->check(CLI::IsMember({"exhaustive", "hungarian"}));
    for (auto* sub : {gen, bench}) {
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--nodes", opt.nodes, "Side sizes: L or L,R");
        sub->add_option("--edges", opt.edges, "Edge count");
        sub->add_option("--maxweight", opt.max_weight, "Largest weight");
        sub->add_option("--output,-o", opt.output, "Output file");
    }
    bench->add_option("--repeat", opt.repeat, "Timed repetitions per cell (median reported)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Runner runner(opt, in, out);
    runner.doc().command = app.get_subcommands().front()->get_name();
    try {
        if (*mwm) return runner.mwm();
        if (*cover) return runner.cover();
        if (*match) return runner.match();
        if (*cavity) return runner.cavity();
        if (*verify) return runner.verify();
        if (*gen) return runner.gen();
        if (*bench) return runner.bench();
    } catch (const ParseError& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return kExitParse;
    } catch (const MatchError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace matchdecomp
