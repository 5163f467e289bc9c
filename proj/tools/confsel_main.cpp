// Command-line front end: graph queries, confounder selection, simulation
// and effect estimation over .cg graph files and CSV datasets. Output is
// JSON by default (--text for tables); exit codes are 0 success, 1 usage or
// semantic error, 2 invalid graph/SEM file, 3 unknown vertex.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "confsel/adjustment.hpp"
#include "confsel/blanket.hpp"
#include "confsel/ci_oracle.hpp"
#include "confsel/dsep.hpp"
#include "confsel/errors.hpp"
#include "confsel/graph_io.hpp"
#include "confsel/sem.hpp"

namespace {

using confsel::Dag;
using confsel::Dataset;
using confsel::SelectionReport;
using confsel::VertexSet;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitBadFile = 2;
constexpr int kExitUnknownVertex = 3;

struct OutputMode {
    bool text = false;
};

json to_json(const VertexSet& set) {
    json out = json::array();
    for (const auto& name : set) out.push_back(name);
    return out;
}

json to_json(const SelectionReport& report) {
    json out;
    out["criterion"] = report.criterion;
    out["input_s"] = to_json(report.input_s);
    out["output_c"] = to_json(report.output_c);
    out["sufficient"] = report.sufficient.has_value() ? json(*report.sufficient) : json(nullptr);
    out["sufficiency_basis"] = report.sufficiency_basis;
    out["assumption_context"] = report.assumption_context;
    out["queries_used"] = report.queries_used;
    if (report.stable.has_value()) out["stable"] = *report.stable;
    out["warnings"] = report.warnings;
    return out;
}

void emit(const json& payload, const OutputMode& mode) {
    if (!mode.text) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : payload.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
}

// The selection criteria addressable from the command line. Structural ones
// need the graph; blanket ones run against a conditional-independence
// oracle.
enum class CriterionKind { Structural, Blanket };

struct CriterionSpec {
    CriterionKind kind;
    std::string token;
};

std::optional<CriterionSpec> lookup_criterion(const std::string& token) {
    for (const char* structural : {"pretreatment", "conjunctive", "disjunctive"}) {
        if (token == structural) return CriterionSpec{CriterionKind::Structural, token};
    }
    for (const char* blanket : {"cap", "cup", "ay", "ya", "ay-star", "ya-star"}) {
        if (token == blanket) return CriterionSpec{CriterionKind::Blanket, token};
    }
    return std::nullopt;
}

SelectionReport run_blanket_criterion(const confsel::CiOracle& oracle, const std::string& token,
                                      const VertexSet& s, const Dag* graph_for_sufficiency) {
    using confsel::CombineRule;
    using confsel::ReduceStart;

    SelectionReport report;
    report.criterion = token;
    report.assumption_context = "candidate-set-sufficient, positivity";
    report.input_s = s;
    oracle.reset_calls();

    if (token == "cap") {
        report.output_c = combine(oracle, CombineRule::Intersect, s);
        report.warnings.push_back(
            "the boundary-intersection rule is not guaranteed to control for confounding");
    } else if (token == "cup") {
        report.output_c = combine(oracle, CombineRule::Union, s);
    } else if (token == "ay") {
        report.output_c = combine(oracle, CombineRule::TreatmentThenOutcome, s);
    } else if (token == "ya") {
        report.output_c = combine(oracle, CombineRule::OutcomeThenTreatment, s);
    } else if (token == "ay-star") {
        report.output_c = reduce_alternating(oracle, ReduceStart::TreatmentFirst, s);
    } else if (token == "ya-star") {
        report.output_c = reduce_alternating(oracle, ReduceStart::OutcomeFirst, s);
    } else {
        throw std::invalid_argument("unknown criterion: " + token);
    }
    report.stable = verify_stability(oracle, report.output_c);
    report.queries_used = oracle.calls();

    if (graph_for_sufficiency != nullptr) {
        report.sufficient = blocks_all_backdoor(*graph_for_sufficiency, report.output_c);
        report.sufficiency_basis = "recomputed-from-graph";
    } else {
        report.sufficiency_basis = "assumed: candidate set taken as sufficient";
    }
    return report;
}

// Latent vertices cannot be selected; the CLI filters them from candidate
// sets up front and reports the drop.
VertexSet observable_candidates(const Dag& g, const VertexSet& requested,
                                std::vector<std::string>& warnings) {
    const VertexSet hidden = requested & g.latent();
    if (!hidden.empty()) {
        warnings.push_back("latent vertices removed from candidate set: " + hidden.to_string());
    }
    return requested - hidden;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"causal-DAG confounder selection toolkit"};
    app.require_subcommand(1);
    OutputMode mode;
    app.add_flag("--text", mode.text, "human-readable output instead of JSON");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker count (results never depend on it)")
        ->check(CLI::PositiveNumber);

    // dsep
    auto* dsep_cmd = app.add_subcommand("dsep", "d-separation query");
    std::string dsep_graph, dsep_x, dsep_y, dsep_given;
    bool dsep_backdoor = false;
    dsep_cmd->add_option("graph", dsep_graph, "graph file (.cg)")->required();
    dsep_cmd->add_option("--x", dsep_x, "first vertex set (comma separated)")->required();
    dsep_cmd->add_option("--y", dsep_y, "second vertex set")->required();
    dsep_cmd->add_option("--given", dsep_given, "conditioning set");
    dsep_cmd->add_flag("--backdoor", dsep_backdoor,
                       "delete edges out of the treatment before the query");

    // check
    auto* check_cmd = app.add_subcommand("check", "is a set a sufficient adjustment set");
    std::string check_graph_path, check_set;
    check_cmd->add_option("graph", check_graph_path)->required();
    check_cmd->add_option("--set", check_set, "candidate adjustment set (may be empty)");

    // select
    auto* select_cmd = app.add_subcommand("select", "run a selection criterion on a graph");
    std::string select_graph_path, select_criterion, select_s;
    select_cmd->add_option("graph", select_graph_path)->required();
    select_cmd->add_option("--criterion", select_criterion)->required();
    select_cmd->add_option("--s", select_s, "candidate set; defaults to observed pre-treatment");

    // select-data
    auto* data_cmd = app.add_subcommand("select-data", "data-driven selection on a CSV dataset");
    std::string data_path, data_criterion, data_treatment, data_outcome, data_candidates;
    double data_alpha = 0.05;
    data_cmd->add_option("data", data_path, "CSV dataset")->required();
    data_cmd->add_option("--criterion", data_criterion)->required();
    data_cmd->add_option("--treatment", data_treatment)->required();
    data_cmd->add_option("--outcome", data_outcome)->required();
    data_cmd->add_option("--alpha", data_alpha, "test level (default 0.05)");
    data_cmd->add_option("--candidates", data_candidates, "defaults to all other columns");

    // minimal
    auto* minimal_cmd = app.add_subcommand("minimal", "all minimal sufficient adjustment sets");
    std::string minimal_graph_path;
    std::size_t minimal_cap = 20;
    minimal_cmd->add_option("graph", minimal_graph_path)->required();
    minimal_cmd->add_option("--cap", minimal_cap, "candidate-set size cap (default 20)");

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "causal closure of a vertex set");
    std::string closure_graph_path, closure_set;
    closure_cmd->add_option("graph", closure_graph_path)->required();
    closure_cmd->add_option("--set", closure_set, "vertex set to close")->required();

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "draw a dataset from the graph's SEM");
    std::string simulate_graph_path, simulate_out;
    std::size_t simulate_n = 1000;
    std::uint64_t simulate_seed = 1;
    simulate_cmd->add_option("graph", simulate_graph_path)->required();
    simulate_cmd->add_option("--n", simulate_n, "rows to draw")->required();
    simulate_cmd->add_option("--seed", simulate_seed, "generator seed")->required();
    simulate_cmd->add_option("--out", simulate_out, "output CSV path")->required();

    // estimate
    auto* estimate_cmd = app.add_subcommand("estimate", "effect estimate by covariate adjustment");
    std::string estimate_data_path, estimate_treatment = "A", estimate_outcome = "Y",
                estimate_adjust;
    estimate_cmd->add_option("data", estimate_data_path)->required();
    estimate_cmd->add_option("--treatment", estimate_treatment, "treatment column (default A)");
    estimate_cmd->add_option("--outcome", estimate_outcome, "outcome column (default Y)");
    estimate_cmd->add_option("--adjust", estimate_adjust, "adjustment set (may be empty)");

    // Top-level flags like --text may appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (dsep_cmd->parsed()) {
        Dag g = confsel::parse_cg_file(dsep_graph).dag;
        if (dsep_backdoor) g = mutilate_backdoor(g);
        const VertexSet xs = VertexSet::from_csv(dsep_x);
        const VertexSet ys = VertexSet::from_csv(dsep_y);
        const VertexSet given = VertexSet::from_csv(dsep_given);
        const bool separated = d_separated(g, xs, ys, given);
        emit(json{{"command", "dsep"},
                  {"graph", dsep_graph},
                  {"query",
                   {{"x", to_json(xs)},
                    {"y", to_json(ys)},
                    {"given", to_json(given)},
                    {"backdoor", dsep_backdoor}}},
                  {"separated", separated}},
             mode);
        return 0;
    }

    if (check_cmd->parsed()) {
        const Dag g = confsel::parse_cg_file(check_graph_path).dag;
        const VertexSet set = VertexSet::from_csv(check_set);
        const bool sufficient = blocks_all_backdoor(g, set);
        emit(json{{"command", "check"},
                  {"graph", check_graph_path},
                  {"set", to_json(set)},
                  {"sufficient", sufficient}},
             mode);
        return 0;
    }

    if (select_cmd->parsed()) {
        const auto spec = lookup_criterion(select_criterion);
        if (!spec) {
            std::cerr << "error: unknown criterion '" << select_criterion << "'\n";
            return kExitUsage;
        }
        const Dag g = confsel::parse_cg_file(select_graph_path).dag;
        std::vector<std::string> warnings;
        const VertexSet s = select_cmd->count("--s") > 0
                                ? observable_candidates(g, VertexSet::from_csv(select_s), warnings)
                                : pretreatment_covariates(g);
        SelectionReport report;
        if (spec->kind == CriterionKind::Structural) {
            if (select_criterion == "pretreatment") {
                report = criterion_pretreatment(g, s);
            } else if (select_criterion == "conjunctive") {
                report = criterion_conjunctive(g, s);
            } else {
                report = criterion_disjunctive(g, s);
            }
        } else {
            const confsel::DsepOracle oracle(g);
            report = run_blanket_criterion(oracle, select_criterion, s, &g);
        }
        report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());
        emit(json{{"command", "select"}, {"graph", select_graph_path}, {"report", to_json(report)}},
             mode);
        return 0;
    }

    if (data_cmd->parsed()) {
        const auto spec = lookup_criterion(data_criterion);
        if (!spec || spec->kind != CriterionKind::Blanket) {
            std::cerr << "error: criterion '" << data_criterion
                      << "' needs a graph; data-driven selection supports "
                         "cap|cup|ay|ya|ay-star|ya-star\n";
            return kExitUsage;
        }
        const Dataset data = Dataset::read_csv_file(data_path);
        VertexSet candidates;
        if (data_cmd->count("--candidates") > 0) {
            candidates = VertexSet::from_csv(data_candidates);
        } else {
            std::vector<std::string> names;
            for (const auto& column : data.columns()) {
                if (column != data_treatment && column != data_outcome) names.push_back(column);
            }
            candidates = VertexSet(std::move(names));
        }
        const confsel::FisherZOracle oracle(data, data_treatment, data_outcome, data_alpha);
        const SelectionReport report =
            run_blanket_criterion(oracle, data_criterion, candidates, nullptr);
        emit(json{{"command", "select-data"},
                  {"data", data_path},
                  {"alpha", data_alpha},
                  {"n", data.n_rows()},
                  {"report", to_json(report)}},
             mode);
        return 0;
    }

    if (minimal_cmd->parsed()) {
        const Dag g = confsel::parse_cg_file(minimal_graph_path).dag;
        const VertexSet s = pretreatment_covariates(g);
        const auto sets = enumerate_minimal_sufficient_sets(g, s, minimal_cap);
        json list = json::array();
        for (const auto& c : sets) list.push_back(to_json(c));
        emit(json{{"command", "minimal"},
                  {"graph", minimal_graph_path},
                  {"candidates", to_json(s)},
                  {"minimal_sets", list}},
             mode);
        return 0;
    }

    if (closure_cmd->parsed()) {
        const Dag g = confsel::parse_cg_file(closure_graph_path).dag;
        const VertexSet h = VertexSet::from_csv(closure_set);
        emit(json{{"command", "closure"},
                  {"graph", closure_graph_path},
                  {"input", to_json(h)},
                  {"closure", to_json(causal_closure(g, h))}},
             mode);
        return 0;
    }

    if (simulate_cmd->parsed()) {
        const auto parsed = confsel::parse_cg_file(simulate_graph_path);
        const confsel::LinearSem sem = confsel::LinearSem::from_parsed(parsed);
        const Dataset data = confsel::sample(sem, simulate_n, simulate_seed);
        std::ofstream out(simulate_out);
        if (!out) {
            std::cerr << "error: cannot write " << simulate_out << "\n";
            return kExitUsage;
        }
        data.write_csv(out);
        emit(json{{"command", "simulate"},
                  {"graph", simulate_graph_path},
                  {"n", simulate_n},
                  {"seed", simulate_seed},
                  {"out", simulate_out},
                  {"columns", data.columns()}},
             mode);
        return 0;
    }

    if (estimate_cmd->parsed()) {
        const Dataset data = Dataset::read_csv_file(estimate_data_path);
        const VertexSet adjust = VertexSet::from_csv(estimate_adjust);
        const double estimate =
            ate_standardization(data, estimate_treatment, estimate_outcome, adjust);
        emit(json{{"command", "estimate"},
                  {"data", estimate_data_path},
                  {"treatment", estimate_treatment},
                  {"outcome", estimate_outcome},
                  {"adjust", to_json(adjust)},
                  {"n", data.n_rows()},
                  {"estimate", estimate}},
             mode);
        return 0;
    }

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const confsel::GraphParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFile;
    } catch (const confsel::UnknownVertexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownVertex;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
