#ifndef CONFSEL_TESTKIT_HPP
#define CONFSEL_TESTKIT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "confsel/blanket.hpp"
#include "confsel/ci_oracle.hpp"
#include "confsel/dag.hpp"

namespace confsel::testkit {

/// Exhaustive d-separation: enumerates every simple path between the sets
/// and applies the d-connection definition to each. Exercises none of the
/// reachability machinery, so it serves as an independent correctness
/// oracle. Graphs above the vertex cap are rejected rather than truncated.
bool dsep_bruteforce(const Dag& g, const VertexSet& xs, const VertexSet& ys,
                     const VertexSet& given, std::size_t vertex_cap = 12);

/// All simple paths between two vertices, as index sequences.
std::vector<std::vector<int>> enumerate_simple_paths(const Dag& g, int from, int to);

/// Evaluates the d-connection definition on one enumerated path. The canary
/// flag inverts the collider classification so the harness can prove it
/// detects injected bugs.
bool path_d_connects_bruteforce(const Dag& g, const std::vector<int>& path,
                                const std::vector<char>& given_mark,
                                const std::vector<char>& an_given_mark,
                                bool invert_collider = false);

/// Every subset of v that is a treatment (or outcome) Markov blanket, in
/// canonical order (by size, then lexicographic). Exponential; capped.
std::vector<VertexSet> enumerate_blanket_family(const CiOracle& oracle, BoundaryKind kind,
                                                const VertexSet& v, std::size_t cap = 12);

/// Causal closure by its defining intersection: enumerates every causally
/// closed superset of h and intersects them.
VertexSet closure_bruteforce(const Dag& g, const VertexSet& h, std::size_t vertex_cap = 12);

struct RandomDagSpec {
    int vertex_count = 0;
    double edge_prob = 0.3;
    double latent_fraction = 0.0;
    std::uint64_t seed = 0;
    /// Treatment precedes outcome in the generation order; required for a
    /// valid causal DAG and kept as an explicit knob.
    bool treatment_before_outcome = true;
    /// Place every covariate before the treatment in the generation order,
    /// so the candidate set "all covariates" is entirely pre-treatment.
    bool covariates_precede_treatment = false;
};

/// Deterministic random DAG per spec. The treatment is named A, the outcome
/// Y, covariates Z1..Zk in generation order.
Dag random_dag(const RandomDagSpec& spec);

struct PropertyFailure {
    std::string description;
    std::string graph_cg;  // offending graph, serialized
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<PropertyFailure> failures;

    bool passed() const { return failures.empty(); }
};

struct PropertyOptions {
    /// All labeled DAGs up to this size are swept where a suite calls for
    /// exhaustiveness (kept small: the count grows super-exponentially).
    int exhaustive_vertices = 5;
    /// The strengthened transitivity sweep additionally covers every DAG on
    /// this many vertices up to isomorphism (edges along a fixed order).
    int transitivity_vertices = 6;
    int random_graphs = 200;
    int random_vertices = 8;
    std::uint64_t seed = 20240911;
    /// When set, failing graphs are also written here as .cg files.
    std::string counterexample_dir;
    /// Harness self-check: invert the brute-force collider test, which must
    /// make the dual-implementation suite fail.
    bool canary_invert_collider = false;
};

/// Runs the property checks backing every module's stated invariants and
/// aggregates pass/fail per suite.
std::vector<SuiteResult> property_suites(const PropertyOptions& options = {});

/// Renders suite results as a JSON report (suite name, cases, failures with
/// serialized graphs).
std::string suites_to_json(const std::vector<SuiteResult>& results);

/// Enumerates every labeled DAG on n vertices (directed edge masks filtered
/// for acyclicity). Treatment/outcome roles are assigned along a topological
/// order so each graph is a valid causal DAG.
void for_each_labeled_dag(int n, const std::function<void(const Dag&)>& fn);

/// Enumerates one representative per isomorphism class: all DAGs whose edges
/// respect the vertex order. Properties invariant under relabeling can be
/// checked exhaustively this way at sizes where the labeled sweep is too
/// large.
void for_each_ordered_dag(int n, const std::function<void(const Dag&)>& fn);

}  // namespace confsel::testkit

#endif
