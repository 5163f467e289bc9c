#ifndef CONFSEL_ADJUSTMENT_HPP
#define CONFSEL_ADJUSTMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confsel/dag.hpp"

namespace confsel {

/// Assumption labels attached to selection results, named by content:
///   all-relevant-covariates-observed : every relevant pre-treatment
///       covariate is in the candidate set
///   candidate-set-sufficient         : the candidate set itself controls
///       for confounding
///   some-subset-sufficient           : at least one subset of the candidate
///       set controls for confounding
struct SelectionReport {
    std::string criterion;
    VertexSet input_s;
    VertexSet output_c;
    std::optional<bool> sufficient;  // empty when no graph is available
    std::string sufficiency_basis;   // "recomputed-from-graph" or "assumed"
    std::string assumption_context;
    std::uint64_t queries_used = 0;
    std::optional<bool> stable;  // populated by data-driven selection
    std::vector<std::string> warnings;
};

/// True iff `c` blocks every back-door path from treatment to outcome,
/// i.e. the graph certifies that adjusting for `c` controls for confounding.
/// `c` must contain no descendant of the treatment.
bool blocks_all_backdoor(const Dag& g, const VertexSet& c);

/// Selects the whole candidate set. Guaranteed sufficient when the candidate
/// set itself is a sufficient adjustment set; the verdict is recomputed from
/// the graph regardless.
SelectionReport criterion_pretreatment(const Dag& g, const VertexSet& s);

/// Selects candidates that are ancestors of both treatment and outcome.
/// Guaranteed sufficient when all relevant covariates are observed.
SelectionReport criterion_conjunctive(const Dag& g, const VertexSet& s);

/// Selects candidates that are ancestors of treatment or outcome. Guaranteed
/// sufficient when some subset of the candidates is sufficient (with
/// faithfulness).
SelectionReport criterion_disjunctive(const Dag& g, const VertexSet& s);

/// True iff some subset of `s` blocks all back-door paths. Decided without
/// subset search: equivalent to the absence of an inducing path between
/// treatment and outcome, relative to the vertices outside `s`, in the
/// edge-out-deleted graph.
bool exists_sufficient_subset(const Dag& g, const VertexSet& s);

/// All inclusion-minimal subsets of `s` that block every back-door path, in
/// canonical order (by size, then lexicographic). `s` must be pre-treatment
/// and no larger than `cap` (subset enumeration is exponential).
std::vector<VertexSet> enumerate_minimal_sufficient_sets(const Dag& g, const VertexSet& s,
                                                         std::size_t cap = 20);

}  // namespace confsel

#endif
