// usf-lab: classify hypergraphs-with-boundary against the component-graph
// ubiquity criterion, and sample wired uniform spanning forests on lattice
// boxes to probe component structure empirically.

#include "usf/classify.hpp"
#include "usf/errors.hpp"
#include "usf/io.hpp"
#include "usf/montecarlo.hpp"
#include "usf/ultrametric.hpp"
#include "usf/weight.hpp"
#include "usf/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr const char* kBuildId = "usf-lab 1.0.0";

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitResource = 4;

struct CliInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CliResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

usf::Hypergraph resolve_input(const std::string& input) {
    if (usf::is_builtin_name(input)) {
        try {
            return usf::make_builtin(input);
        } catch (const std::invalid_argument& e) {
            throw usf::parse_error(0, e.what());
        }
    }
    return usf::load_hypergraph(input);
}

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw CliInvariantError("cannot write to '" + out_path + "'");
    return file;
}

void check_dimension_range(int lo, int hi) {
    if (lo < 5 || hi > 64 || lo > hi)
        throw CliInvariantError("dimension range must lie within [5, 64]");
}

std::string partition_to_string(const usf::Hypergraph& h, const usf::EdgePartition& p) {
    if (p.blocks.empty()) return "{}";
    std::string s;
    for (const auto& block : p.blocks) {
        s += '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) s += ' ';
            s += h.edge_ids[block[i]];
        }
        s += "} ";
    }
    s.pop_back();
    return s;
}

std::string merge_plan_to_string(const usf::Hypergraph& h, const usf::VertexMergePlan& m) {
    if (static_cast<int>(m.blocks.size()) == h.vertex_count()) return "identity";
    std::string s;
    for (const auto& block : m.blocks) {
        if (block.size() < 2) continue;
        s += '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) s += ' ';
            s += h.vertex_id(block[i]);
        }
        s += "} ";
    }
    if (!s.empty()) s.pop_back();
    return s;
}

// ---------------------------------------------------------------- classify

struct ClassifyConfig {
    std::string input;
    int dim = 0;
    std::string mode = "hypergraph";
    std::optional<int> cap;
    std::string format = "text";
    std::string out;
};

int cmd_classify(const ClassifyConfig& cfg) {
    check_dimension_range(cfg.dim, cfg.dim);
    const usf::Mode mode = cfg.mode == "graph" ? usf::Mode::graph : usf::Mode::hypergraph;
    usf::Hypergraph h = resolve_input(cfg.input);
    usf::validate(h);

    usf::MinMaxSolution mm = usf::min_max_weight(h, usf::Rat(cfg.dim));
    const bool scan_quotients = h.vertex_count() <= 10;
    usf::DimensionVerdict v = scan_quotients
                                  ? usf::classify_ubiquitous(h, cfg.dim, mode, cfg.cap)
                                  : usf::classify_faithful(h, cfg.dim, mode);

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.out);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["input"] = cfg.input;
        j["dimension"] = cfg.dim;
        j["mode"] = cfg.mode;
        j["minmax_value"] = usf::to_string(mm.value);
        j["faithfully_ubiquitous"] = v.faithfully_ubiquitous;
        if (v.ubiquitous) j["ubiquitous"] = *v.ubiquitous;
        j["witness_coarsening"] = partition_to_string(h, mm.witness_coarsening);
        if (v.witness_quotient)
            j["witness_quotient"] = merge_plan_to_string(h, *v.witness_quotient);
        j["r_requirement"] = v.r_requirement;
        if (v.edge_degree_cap) j["edge_degree_cap"] = *v.edge_degree_cap;
        os << j.dump(2) << '\n';
    } else {
        os << "input: " << cfg.input << '\n'
           << "dimension: " << cfg.dim << '\n'
           << "mode: " << cfg.mode << '\n'
           << "minmax value: " << usf::to_string(mm.value) << '\n'
           << "faithfully ubiquitous: " << (v.faithfully_ubiquitous ? "yes" : "no") << '\n';
        if (v.ubiquitous)
            os << "ubiquitous: " << (*v.ubiquitous ? "yes" : "no") << '\n';
        else
            os << "ubiquitous: not evaluated (vertex count above quotient-scan limit)\n";
        os << "witness coarsening: " << partition_to_string(h, mm.witness_coarsening) << '\n';
        if (v.witness_quotient)
            os << "witness quotient: " << merge_plan_to_string(h, *v.witness_quotient) << '\n';
        os << "r requirement: " << v.r_requirement << '\n';
    }
    return 0;
}

// ----------------------------------------------------------------- profile

struct ProfileConfig {
    std::string input;
    std::string dims = "5..16";
    std::string mode = "hypergraph";
    std::optional<int> cap;
    std::string format = "text";
    std::string out;
};

std::pair<int, int> parse_dims(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int d = std::stoi(s);
            return {d, d};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw usf::parse_error(0, "bad dimension range '" + s + "' (expected A..B)");
    }
}

int cmd_profile(const ProfileConfig& cfg) {
    auto [lo, hi] = parse_dims(cfg.dims);
    check_dimension_range(lo, hi);
    const usf::Mode mode = cfg.mode == "graph" ? usf::Mode::graph : usf::Mode::hypergraph;
    usf::Hypergraph h = resolve_input(cfg.input);
    usf::validate(h);

    const bool scan_quotients = h.vertex_count() <= 10;
    struct Row {
        int dim;
        usf::DimensionVerdict verdict;
    };
    std::vector<Row> rows;
    for (int d = lo; d <= hi; ++d)
        rows.push_back({d, scan_quotients ? usf::classify_ubiquitous(h, d, mode, cfg.cap)
                                          : usf::classify_faithful(h, d, mode)});
    usf::CriticalDimensions crit = usf::critical_dimensions(h, mode, lo, hi, cfg.cap);

    auto ubiq_cell = [](const usf::DimensionVerdict& v) {
        return v.ubiquitous ? (*v.ubiquitous ? "yes" : "no") : "-";
    };

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.out);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["input"] = cfg.input;
        j["mode"] = cfg.mode;
        nlohmann::json table = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            r["dimension"] = row.dim;
            r["faithfully_ubiquitous"] = row.verdict.faithfully_ubiquitous;
            if (row.verdict.ubiquitous) r["ubiquitous"] = *row.verdict.ubiquitous;
            r["minmax_value"] = usf::to_string(row.verdict.minmax_value);
            table.push_back(std::move(r));
        }
        j["rows"] = std::move(table);
        if (crit.faithful_threshold) j["faithful_threshold"] = *crit.faithful_threshold;
        if (crit.ubiquity_threshold) j["ubiquity_threshold"] = *crit.ubiquity_threshold;
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "dimension,faithful,ubiquitous,minmax\n";
        for (const auto& row : rows)
            os << row.dim << ',' << (row.verdict.faithfully_ubiquitous ? "yes" : "no") << ','
               << ubiq_cell(row.verdict) << ',' << usf::to_string(row.verdict.minmax_value) << '\n';
    } else {
        os << "input: " << cfg.input << "  mode: " << cfg.mode << '\n';
        os << "dim  faithful  ubiquitous  minmax\n";
        for (const auto& row : rows) {
            os << row.dim << (row.dim < 10 ? "    " : "   ")
               << (row.verdict.faithfully_ubiquitous ? "yes" : "no ") << "       "
               << ubiq_cell(row.verdict) << "          "
               << usf::to_string(row.verdict.minmax_value);
            if (crit.faithful_threshold && row.dim == *crit.faithful_threshold)
                os << "   <- faithful threshold";
            if (crit.ubiquity_threshold && row.dim == *crit.ubiquity_threshold)
                os << "   <- ubiquity threshold";
            os << '\n';
        }
        os << "faithful threshold: "
           << (crit.faithful_threshold ? std::to_string(*crit.faithful_threshold) : "none in range")
           << '\n';
        if (scan_quotients)
            os << "ubiquity threshold: "
               << (crit.ubiquity_threshold ? std::to_string(*crit.ubiquity_threshold)
                                           : "none in range")
               << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateConfig {
    std::string stat = "component-count";
    int d = 2;
    int64_t side = 4;
    int64_t samples = 1;
    uint64_t seed = 0;
    int threads = 0;
    std::string pairs = "auto";
    int min_components = 2;
    int r_max = 4;
    int r = 3;
    std::string input;
    std::string format = "csv";
    std::string out;
};

void check_memory_budget(const usf::LatticeBox& box, int workers) {
    const char* env = std::getenv("USF_LAB_MEM_BUDGET_MB");
    const long long budget_mb = env ? std::atoll(env) : 2048;
    const long long need_mb =
        static_cast<long long>(box.volume) * 40 * workers / (1024 * 1024) + 1;
    if (need_mb > budget_mb)
        throw CliResourceError("box of " + std::to_string(box.volume) + " vertices needs ~" +
                               std::to_string(need_mb) + " MB > budget " +
                               std::to_string(budget_mb) +
                               " MB (set USF_LAB_MEM_BUDGET_MB to override)");
}

struct CsvRow {
    std::string statistic;
    std::string value;
};

void emit_simulation(const SimulateConfig& cfg, const std::vector<std::string>& meta,
                     const std::vector<CsvRow>& rows) {
    std::ofstream file;
    std::ostream& os = open_output(file, cfg.out);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["build"] = kBuildId;
        for (const auto& m : meta) {
            auto eq = m.find('=');
            j["params"][m.substr(0, eq)] = m.substr(eq + 1);
        }
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            r["seed"] = cfg.seed;
            r["d"] = cfg.d;
            r["L"] = cfg.side;
            r["statistic"] = row.statistic;
            r["value"] = row.value;
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        os << j.dump(2) << '\n';
    } else {
        os << "# " << kBuildId << '\n';
        os << "#";
        for (const auto& m : meta) os << ' ' << m;
        os << '\n';
        os << "seed,d,L,statistic,value\n";
        for (const auto& row : rows)
            os << cfg.seed << ',' << cfg.d << ',' << cfg.side << ',' << row.statistic << ','
               << row.value << '\n';
    }
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

int cmd_simulate(const SimulateConfig& cfg) {
    if (cfg.samples < 1) throw CliInvariantError("samples must be >= 1");
    if (cfg.side < 2) throw CliInvariantError("side must be >= 2");
    if (cfg.d < 1) throw CliInvariantError("lattice dimension must be >= 1");
    usf::LatticeBox box(cfg.d, cfg.side);
    const int workers = usf::resolve_threads(cfg.threads);
    check_memory_budget(box, workers);

    std::vector<std::string> meta{"cmd=simulate", "stat=" + cfg.stat, "d=" + std::to_string(cfg.d),
                                  "side=" + std::to_string(cfg.side),
                                  "samples=" + std::to_string(cfg.samples),
                                  "seed=" + std::to_string(cfg.seed)};
    std::vector<CsvRow> rows;

    if (cfg.stat == "component-count") {
        auto counts = usf::component_count_samples(box, cfg.samples, cfg.seed, cfg.threads);
        for (int32_t c : counts) rows.push_back({"component-count", std::to_string(c)});
    } else if (cfg.stat == "pair-connect") {
        std::vector<int64_t> seps;
        if (cfg.pairs == "auto") {
            for (int64_t s : {2, 4, 8})
                if (s <= cfg.side - 2) seps.push_back(s);
        } else {
            std::stringstream ss(cfg.pairs);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) seps.push_back(std::stoll(tok));
        }
        if (seps.empty()) throw CliInvariantError("no usable pair separations for this box");
        meta.push_back("pairs=" + cfg.pairs);
        for (int64_t s : seps) {
            usf::Point a(cfg.d, cfg.side / 2), b(cfg.d, cfg.side / 2);
            a[0] -= s / 2;
            b[0] += s - s / 2;
            if (a[0] < 0 || b[0] >= cfg.side)
                throw CliInvariantError("separation " + std::to_string(s) + " exceeds the box");
            auto est = usf::estimate_connection(box, {a, b}, cfg.samples, cfg.seed, cfg.threads);
            const std::string tag = "[dist=" + std::to_string(s) + "]";
            rows.push_back({"pair-connect" + tag, format_double(est.p)});
            rows.push_back({"pair-connect-ci-low" + tag, format_double(est.ci_low)});
            rows.push_back({"pair-connect-ci-high" + tag, format_double(est.ci_high)});
        }
    } else if (cfg.stat == "r-estimate") {
        meta.push_back("m=" + std::to_string(cfg.min_components));
        meta.push_back("r_max=" + std::to_string(cfg.r_max));
        auto est = usf::estimate_r_threshold(box, cfg.min_components, cfg.r_max, cfg.samples,
                                             cfg.seed, cfg.threads);
        for (int r = 1; r <= cfg.r_max; ++r)
            rows.push_back(
                {"r-hit-freq[r=" + std::to_string(r) + "]", format_double(est.hit_frequency[r - 1])});
        rows.push_back({"r-threshold", std::to_string(est.threshold)});
    } else if (cfg.stat == "witness-count") {
        if (cfg.input.empty()) throw CliInvariantError("witness-count needs --input");
        usf::Hypergraph h = resolve_input(cfg.input);
        usf::validate(h);
        meta.push_back("input=" + cfg.input);
        meta.push_back("r=" + std::to_string(cfg.r));
        auto counts =
            usf::witness_count_samples(box, h, cfg.r, cfg.samples, cfg.seed, cfg.threads);
        for (int64_t c : counts) rows.push_back({"witness-count", std::to_string(c)});
    } else if (cfg.stat == "forest-dump") {
        usf::CounterRng rng(cfg.seed, 0);
        usf::LatticeForest f = usf::wilson_wired(box, rng);
        std::ofstream file;
        std::ostream& os = open_output(file, cfg.out);
        os << "# " << kBuildId << " seed=" << cfg.seed << " d=" << cfg.d << " side=" << cfg.side
           << '\n';
        usf::dump_forest(f, os);
        return 0;
    } else {
        throw CliInvariantError("unknown statistic '" + cfg.stat + "'");
    }

    emit_simulation(cfg, meta, rows);
    return 0;
}

// -------------------------------------------------------------- ultrametric

struct UltrametricConfig {
    std::string input;
    int64_t samples = 10000;
    uint64_t seed = 0;
    std::string format = "text";
    std::string out;
};

int cmd_ultrametric(const UltrametricConfig& cfg) {
    std::ifstream in(cfg.input);
    if (!in) throw usf::parse_error(0, "cannot open '" + cfg.input + "'");
    usf::ObjectiveSpec f = usf::parse_objective(in);

    usf::PolytopeMax best = usf::maximize_over_polytope(f);
    usf::CounterRng rng(cfg.seed, 0);
    usf::Rat best_sampled(0);
    bool any = false;
    for (int64_t i = 0; i < cfg.samples; ++i) {
        usf::UltrametricPoint x = usf::random_ultrametric(f.index_set, rng);
        usf::Rat v = usf::evaluate(f, x);
        if (!any || v > best_sampled) {
            any = true;
            best_sampled = v;
        }
    }

    std::string partition_text;
    for (const auto& block : best.partition) {
        partition_text += '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) partition_text += ' ';
            partition_text += f.index_set[block[i]];
        }
        partition_text += "} ";
    }
    if (!partition_text.empty()) partition_text.pop_back();

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.out);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["input"] = cfg.input;
        j["max_value"] = usf::to_string(best.value);
        j["partition"] = partition_text;
        j["samples"] = cfg.samples;
        j["best_sampled"] = usf::to_string(best_sampled);
        j["gap"] = usf::to_string(best.value - best_sampled);
        os << j.dump(2) << '\n';
    } else {
        os << "max value: " << usf::to_string(best.value) << '\n'
           << "partition: " << partition_text << '\n'
           << "sampled " << cfg.samples << " random ultrametrics, best value "
           << usf::to_string(best_sampled) << " (gap " << usf::to_string(best.value - best_sampled)
           << ", never negative)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform spanning forest component-graph laboratory"};
    app.require_subcommand(1);

    ClassifyConfig ccfg;
    auto* classify = app.add_subcommand("classify", "decide ubiquity verdicts for one dimension");
    classify->add_option("input", ccfg.input, "hypergraph file or builtin (edge:k, path:n, ...)")
        ->required();
    classify->add_option("--dim", ccfg.dim, "dimension (integer in [5,64])")->required();
    classify->add_option("--mode", ccfg.mode, "graph|hypergraph")
        ->check(CLI::IsMember({"graph", "hypergraph"}));
    int ccap = -1;
    classify->add_option("--edge-degree-cap", ccap, "max quotient edge degree (hypergraph mode)");
    classify->add_option("--format", ccfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--out", ccfg.out, "output path (default stdout)");

    ProfileConfig pcfg;
    auto* profile = app.add_subcommand("profile", "verdict table over a dimension range");
    profile->add_option("input", pcfg.input, "hypergraph file or builtin")->required();
    profile->add_option("--dims", pcfg.dims, "dimension range A..B");
    profile->add_option("--mode", pcfg.mode, "graph|hypergraph")
        ->check(CLI::IsMember({"graph", "hypergraph"}));
    int pcap = -1;
    profile->add_option("--edge-degree-cap", pcap, "max quotient edge degree (hypergraph mode)");
    profile->add_option("--format", pcfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    profile->add_option("--out", pcfg.out, "output path (default stdout)");

    SimulateConfig scfg;
    auto* simulate = app.add_subcommand("simulate", "sample wired spanning forests on a box");
    simulate->add_option("--stat", scfg.stat,
                         "component-count|pair-connect|r-estimate|witness-count|forest-dump");
    simulate->add_option("--d", scfg.d, "lattice dimension");
    simulate->add_option("--side", scfg.side, "box side length");
    simulate->add_option("--samples", scfg.samples, "number of samples");
    simulate->add_option("--seed", scfg.seed, "random seed");
    simulate->add_option("--threads", scfg.threads, "worker cap (0 = auto)");
    simulate->add_option("--pairs", scfg.pairs, "auto or comma list of separations");
    simulate->add_option("--m", scfg.min_components, "components required (r-estimate)");
    simulate->add_option("--r-max", scfg.r_max, "radius cap (r-estimate)");
    simulate->add_option("--r", scfg.r, "presence radius (witness-count)");
    simulate->add_option("--input", scfg.input, "pattern hypergraph (witness-count)");
    simulate->add_option("--format", scfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", scfg.out, "output path (default stdout)");

    UltrametricConfig ucfg;
    auto* ultrametric = app.add_subcommand("ultrametric", "maximize an objective over the polytope");
    ultrametric->add_option("input", ucfg.input, "objective file")->required();
    ultrametric->add_option("--samples", ucfg.samples, "random ultrametrics for the gap audit");
    ultrametric->add_option("--seed", ucfg.seed, "random seed");
    ultrametric->add_option("--format", ucfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    ultrametric->add_option("--out", ucfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (*classify) {
            if (ccap >= 0) ccfg.cap = ccap;
            return cmd_classify(ccfg);
        }
        if (*profile) {
            if (pcap >= 0) pcfg.cap = pcap;
            return cmd_profile(pcfg);
        }
        if (*simulate) return cmd_simulate(scfg);
        if (*ultrametric) return cmd_ultrametric(ucfg);
    } catch (const usf::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CliResourceError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitResource;
    } catch (const CliInvariantError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const usf::usf_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
