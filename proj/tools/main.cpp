#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbond/campaign.hpp"
#include "rbond/families.hpp"
#include "rbond/graph6.hpp"
#include "rbond/report.hpp"

using namespace rbond;

namespace {

struct SharedOpts {
    std::string input;
    std::string format = "graph6";
    std::vector<std::string> gens;
    std::string exhaustive;
    bool connected = false;
    bool strict = false;
    std::optional<int> cap;
    std::string checks = "all";
    std::string out;
    std::string csv;
    std::optional<int> workers;
};

void add_shared(CLI::App* cmd, SharedOpts& o) {
    cmd->add_option("--input", o.input, "corpus file to load");
    cmd->add_option("--format", o.format, "corpus format: graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--gen", o.gens,
                    "generated graph, family:params (path:5, cycle:6, complete:4, "
                    "star:3, grid:3,3, toroidal_grid:3,3, icosahedron); repeatable");
    cmd->add_option("--exhaustive", o.exhaustive,
                    "every labeled graph of order N, or of each order in A..B (max 7)");
    cmd->add_flag("--connected", o.connected,
                  "restrict --exhaustive to connected graphs");
    cmd->add_flag("--strict", o.strict, "fail on the first malformed corpus record");
    cmd->add_option("--cap", o.cap, "bondage search subset-size cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--checks", o.checks,
                    "comma-separated check names, all, or none (verify only)");
    cmd->add_option("--out", o.out, "write results here instead of stdout");
    cmd->add_option("--csv", o.csv, "also write a CSV summary (verify only)");
    cmd->add_option("--workers", o.workers,
                    "worker threads; default RB_WORKERS, else hardware")
        ->check(CLI::PositiveNumber);
}

int parse_int_strict(const std::string& text) {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
}

std::pair<int, int> parse_exhaustive(const std::string& text) {
    try {
        auto sep = text.find("..");
        if (sep == std::string::npos) {
            int n = parse_int_strict(text);
            return {n, n};
        }
        return {parse_int_strict(text.substr(0, sep)),
                parse_int_strict(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --exhaustive value: " + text +
                                    " (expected N or A..B)");
    }
}

std::vector<CheckId> parse_checks(const std::string& text) {
    if (text == "all") return StageSet::all().checks;
    if (text.empty() || text == "none") return {};
    std::vector<CheckId> ids;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string name =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        auto id = check_from_name(name);
        if (!id) throw std::invalid_argument("unknown check name: " + name);
        ids.push_back(*id);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ids;
}

CampaignConfig build_config(const SharedOpts& o) {
    CampaignConfig cfg;
    if (!o.input.empty()) cfg.input_path = o.input;
    cfg.format = o.format == "edgelist" ? CorpusFormat::EdgeList : CorpusFormat::Graph6;
    cfg.strict = o.strict;
    cfg.generator_specs = o.gens;
    if (!o.exhaustive.empty()) cfg.exhaustive = parse_exhaustive(o.exhaustive);
    cfg.connected_only = o.connected;
    cfg.bondage_cap = o.cap;
    if (!o.out.empty()) cfg.out_path = o.out;
    if (!o.csv.empty()) cfg.csv_path = o.csv;
    cfg.workers = resolve_worker_count(o.workers);
    cfg.stages = StageSet::all();
    cfg.stages.checks = parse_checks(o.checks);
    return cfg;
}

void require_source(const CampaignConfig& cfg) {
    if (!cfg.input_path && cfg.generator_specs.empty() && !cfg.exhaustive)
        throw std::invalid_argument(
            "no corpus source: give --input, --gen, or --exhaustive");
}

std::string pretty_rational(const Rational& r) {
    if (is_integer(r)) return std::to_string(r.numerator());
    return to_string(r);
}

/// Streams the corpus through the selected stages and prints one text line
/// per graph. Returns a process exit code.
int run_text_verb(const CampaignConfig& cfg, const StageSet& stages,
                  const std::function<void(const GraphReport&, std::ostream&)>& print) {
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (cfg.out_path) {
        file.open(*cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << *cfg.out_path << "\n";
            return 2;
        }
        sink = &file;
    }
    try {
        for_each_item(
            cfg,
            [&](const CampaignItem& item) {
                GraphReport report = compute_report(item, stages, cfg.bondage_cap);
                print(report, *sink);
                return true;
            },
            std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    sink->flush();
    return 0;
}

/// gen prints each corpus graph as graph6; hat applies the five-vertex-arm
/// construction first.
int run_emit_verb(const CampaignConfig& cfg, bool apply_hat) {
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (cfg.out_path) {
        file.open(*cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << *cfg.out_path << "\n";
            return 2;
        }
        sink = &file;
    }
    try {
        for_each_item(
            cfg,
            [&](const CampaignItem& item) {
                Graph g = apply_hat ? hat_construction(item.graph) : item.graph;
                *sink << write_graph6(g) << "\n";
                return true;
            },
            std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    sink->flush();
    return 0;
}

void print_solve_line(const GraphReport& r, std::ostream& out) {
    out << r.id << " n=" << r.n << " m=" << r.m << " gamma=";
    if (r.gamma)
        out << *r.gamma;
    else
        out << "-";
    out << " gamma_r=";
    if (r.gamma_r)
        out << *r.gamma_r;
    else
        out << "-";
    out << "\n";
}

void print_bondage_line(const GraphReport& r, std::ostream& out) {
    out << r.id << " status=";
    if (!r.bondage) {
        out << "-\n";
        return;
    }
    out << bondage_status_name(r.bondage->status) << " value=";
    if (r.bondage->value)
        out << *r.bondage->value;
    else
        out << "-";
    out << " witness=[";
    for (std::size_t i = 0; i < r.bondage->witness_edges.size(); ++i) {
        const Edge& e = r.bondage->witness_edges[i];
        if (i > 0) out << ",";
        out << "(" << e.first << "," << e.second << ")";
    }
    out << "] cap_used=" << r.bondage->cap_used << "\n";
}

void print_bounds_line(const GraphReport& r, std::ostream& out) {
    out << r.id;
    for (const auto& e : r.bounds) {
        out << " " << bound_name(e.id) << "=";
        if (e.applicable && e.value)
            out << pretty_rational(*e.value);
        else
            out << "n/a";
    }
    out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Roman domination and Roman bondage toolkit"};
    app.require_subcommand(1);

    SharedOpts opts;
    auto* solve_cmd =
        app.add_subcommand("solve", "compute gamma and gamma_r for each graph");
    auto* bondage_cmd =
        app.add_subcommand("bondage", "compute the Roman bondage number per graph");
    auto* bounds_cmd =
        app.add_subcommand("bounds", "evaluate the upper bounds per graph");
    auto* verify_cmd = app.add_subcommand(
        "verify", "full pipeline with JSON-lines reports; exit 1 on any violation");
    auto* hunt_cmd = app.add_subcommand(
        "hunt", "stream the corpus and stop at the first report matching a predicate");
    auto* hat_cmd = app.add_subcommand(
        "hat", "print the graph6 of the five-vertex-arm expansion of each graph");
    auto* gen_cmd = app.add_subcommand("gen", "print each corpus graph as graph6");
    for (CLI::App* cmd :
         {solve_cmd, bondage_cmd, bounds_cmd, verify_cmd, hunt_cmd, hat_cmd, gen_cmd})
        add_shared(cmd, opts);

    std::string predicate;
    hunt_cmd
        ->add_option("predicate", predicate,
                     "e.g. \"v_plus_size > 0\" or \"bondage.value > Delta AND n < 7\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CampaignConfig cfg = build_config(opts);
        require_source(cfg);
        if (app.got_subcommand(verify_cmd))
            return run_campaign(cfg, std::cout, std::cerr);
        if (app.got_subcommand(hunt_cmd))
            return run_hunt(cfg, predicate, std::cout, std::cerr);
        if (app.got_subcommand(hat_cmd)) return run_emit_verb(cfg, true);
        if (app.got_subcommand(gen_cmd)) return run_emit_verb(cfg, false);
        StageSet stages;
        std::function<void(const GraphReport&, std::ostream&)> printer;
        if (app.got_subcommand(solve_cmd)) {
            stages.solve = true;
            printer = print_solve_line;
        } else if (app.got_subcommand(bondage_cmd)) {
            stages.bondage = true;
            printer = print_bondage_line;
        } else {
            stages.bounds = true;
            printer = print_bounds_line;
        }
        return run_text_verb(cfg, stages, printer);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
