#ifndef CONFSEL_BLANKET_HPP
#define CONFSEL_BLANKET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "confsel/ci_oracle.hpp"

namespace confsel {

enum class BoundaryKind { Treatment, Outcome };

/// Combination rules for the two Markov boundaries of a candidate set:
///   Intersect           : R_A ∩ R_Y|A   (not guaranteed sufficient)
///   Union               : R_A ∪ R_Y|A
///   TreatmentThenOutcome: outcome boundary of the treatment boundary
///   OutcomeThenTreatment: treatment boundary of the outcome boundary
enum class CombineRule { Intersect, Union, TreatmentThenOutcome, OutcomeThenTreatment };

enum class ReduceStart { TreatmentFirst, OutcomeFirst };

/// True iff `sub` is a treatment Markov blanket in v: the treatment is
/// independent of v \ sub given sub. An empty remainder is independent by
/// convention.
bool is_treatment_blanket(const CiOracle& oracle, const VertexSet& v, const VertexSet& sub);

/// Outcome counterpart: the outcome is independent of v \ sub given sub and
/// the treatment.
bool is_outcome_blanket(const CiOracle& oracle, const VertexSet& v, const VertexSet& sub);

struct BoundaryStep {
    std::string vertex;
    bool independent = false;  // oracle verdict for this vertex's test
    bool retained = false;
};

struct BoundaryTrace {
    BoundaryKind kind = BoundaryKind::Treatment;
    std::vector<std::string> input_order;
    std::vector<BoundaryStep> steps;
    VertexSet boundary;
    std::uint64_t oracle_calls = 0;
};

/// Markov boundary by one independence test per vertex: w is kept iff the
/// target depends on w given the rest of v (and the treatment, for the
/// outcome boundary). Requires an oracle with the intersection property
/// (positivity); the individual tests are independent of each other.
BoundaryTrace boundary_pointwise(const CiOracle& oracle, BoundaryKind kind, const VertexSet& v);

/// Backward stepwise boundary: pop the first vertex, test the target against
/// it given the remaining list plus everything retained so far, retain on
/// dependence. Under positivity the result equals boundary_pointwise for any
/// input order. Entries must be unique.
BoundaryTrace boundary_stepwise(const CiOracle& oracle, BoundaryKind kind,
                                const std::vector<std::string>& v);

/// Applies one of the four boundary combination rules to s.
VertexSet combine(const CiOracle& oracle, CombineRule rule, const VertexSet& s);

/// Alternates treatment and outcome boundaries from s until a full pass
/// leaves the set unchanged; each pass weakly shrinks the set, so this
/// terminates. The result has both boundaries equal to itself.
VertexSet reduce_alternating(const CiOracle& oracle, ReduceStart start, const VertexSet& s);

/// True iff both Markov boundaries of c equal c. Reduced sets from a sound
/// oracle always pass; a data-driven oracle whose finite-sample answers
/// break the intersection property can fail here, which is worth surfacing.
bool verify_stability(const CiOracle& oracle, const VertexSet& c);

}  // namespace confsel

#endif
