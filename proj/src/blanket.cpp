#include "confsel/blanket.hpp"

#include <set>
#include <stdexcept>

namespace confsel {

namespace {

void require_candidates(const CiOracle& oracle, const VertexSet& v) {
    if (v.contains(oracle.treatment()) || v.contains(oracle.outcome())) {
        throw std::invalid_argument("candidate set may not contain treatment or outcome");
    }
}

bool blanket_query(const CiOracle& oracle, BoundaryKind kind, const VertexSet& remainder,
                   const VertexSet& given) {
    if (kind == BoundaryKind::Treatment) {
        return oracle.query(VertexSet{oracle.treatment()}, remainder, given);
    }
    return oracle.query(VertexSet{oracle.outcome()}, remainder,
                        given | VertexSet{oracle.treatment()});
}

}  // namespace

bool is_treatment_blanket(const CiOracle& oracle, const VertexSet& v, const VertexSet& sub) {
    require_candidates(oracle, v);
    if (!sub.is_subset_of(v)) {
        throw std::invalid_argument("blanket candidate must be a subset of the variable set");
    }
    return blanket_query(oracle, BoundaryKind::Treatment, v - sub, sub);
}

bool is_outcome_blanket(const CiOracle& oracle, const VertexSet& v, const VertexSet& sub) {
    require_candidates(oracle, v);
    if (!sub.is_subset_of(v)) {
        throw std::invalid_argument("blanket candidate must be a subset of the variable set");
    }
    return blanket_query(oracle, BoundaryKind::Outcome, v - sub, sub);
}

BoundaryTrace boundary_pointwise(const CiOracle& oracle, BoundaryKind kind, const VertexSet& v) {
    require_candidates(oracle, v);
    BoundaryTrace trace;
    trace.kind = kind;
    trace.input_order = v.names();
    const std::uint64_t calls_before = oracle.calls();

    std::vector<std::string> kept;
    for (const auto& w : v) {
        const bool independent = blanket_query(oracle, kind, VertexSet{w}, v.without(w));
        trace.steps.push_back({w, independent, !independent});
        if (!independent) kept.push_back(w);
    }
    trace.boundary = VertexSet(std::move(kept));
    trace.oracle_calls = oracle.calls() - calls_before;
    return trace;
}

BoundaryTrace boundary_stepwise(const CiOracle& oracle, BoundaryKind kind,
                                const std::vector<std::string>& v) {
    {
        std::set<std::string> unique(v.begin(), v.end());
        if (unique.size() != v.size()) {
            throw std::invalid_argument("stepwise boundary input contains duplicates");
        }
    }
    require_candidates(oracle, VertexSet(v));

    BoundaryTrace trace;
    trace.kind = kind;
    trace.input_order = v;
    const std::uint64_t calls_before = oracle.calls();

    VertexSet remaining(v);
    VertexSet retained;
    for (const auto& vertex : v) {
        remaining = remaining.without(vertex);
        const bool independent =
            blanket_query(oracle, kind, VertexSet{vertex}, remaining | retained);
        trace.steps.push_back({vertex, independent, !independent});
        if (!independent) retained = retained.with(vertex);
    }
    trace.boundary = retained;
    trace.oracle_calls = oracle.calls() - calls_before;
    return trace;
}

VertexSet combine(const CiOracle& oracle, CombineRule rule, const VertexSet& s) {
    switch (rule) {
        case CombineRule::Intersect:
            return boundary_pointwise(oracle, BoundaryKind::Treatment, s).boundary &
                   boundary_pointwise(oracle, BoundaryKind::Outcome, s).boundary;
        case CombineRule::Union:
            return boundary_pointwise(oracle, BoundaryKind::Treatment, s).boundary |
                   boundary_pointwise(oracle, BoundaryKind::Outcome, s).boundary;
        case CombineRule::TreatmentThenOutcome:
            return boundary_pointwise(
                       oracle, BoundaryKind::Outcome,
                       boundary_pointwise(oracle, BoundaryKind::Treatment, s).boundary)
                .boundary;
        case CombineRule::OutcomeThenTreatment:
            return boundary_pointwise(
                       oracle, BoundaryKind::Treatment,
                       boundary_pointwise(oracle, BoundaryKind::Outcome, s).boundary)
                .boundary;
    }
    throw std::logic_error("unreachable combine rule");
}

VertexSet reduce_alternating(const CiOracle& oracle, ReduceStart start, const VertexSet& s) {
    const BoundaryKind first =
        start == ReduceStart::TreatmentFirst ? BoundaryKind::Treatment : BoundaryKind::Outcome;
    const BoundaryKind second =
        start == ReduceStart::TreatmentFirst ? BoundaryKind::Outcome : BoundaryKind::Treatment;

    VertexSet current = s;
    while (true) {
        const VertexSet after_first = boundary_pointwise(oracle, first, current).boundary;
        const VertexSet after_second = boundary_pointwise(oracle, second, after_first).boundary;
        if (after_second == current) return current;
        current = after_second;
    }
}

bool verify_stability(const CiOracle& oracle, const VertexSet& c) {
    return boundary_pointwise(oracle, BoundaryKind::Treatment, c).boundary == c &&
           boundary_pointwise(oracle, BoundaryKind::Outcome, c).boundary == c;
}

}  // namespace confsel
