#include "doctest.h"

#include "confsel/blanket.hpp"
#include "confsel/ci_oracle.hpp"
#include "fixtures.hpp"

using namespace confsel;

TEST_CASE("blanket membership") {
    const DsepOracle oracle(fixtures::chain_confounder());
    const VertexSet s{"X1", "X2"};

    CHECK(is_treatment_blanket(oracle, s, VertexSet{"X1"}));
    CHECK_FALSE(is_treatment_blanket(oracle, s, VertexSet{"X2"}));
    CHECK(is_treatment_blanket(oracle, s, s));  // the set itself always qualifies

    CHECK(is_outcome_blanket(oracle, s, VertexSet{"X2"}));
    CHECK_FALSE(is_outcome_blanket(oracle, s, VertexSet{"X1"}));
    CHECK(is_outcome_blanket(oracle, s, s));

    CHECK_THROWS_AS((void)is_treatment_blanket(oracle, VertexSet{"X1"}, s),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)boundary_pointwise(oracle, BoundaryKind::Treatment, VertexSet{"A", "X1"}),
        std::invalid_argument);
}

TEST_CASE("pointwise boundaries") {
    const DsepOracle gb(fixtures::chain_confounder());
    CHECK(boundary_pointwise(gb, BoundaryKind::Treatment, VertexSet{"X1", "X2"}).boundary ==
          VertexSet{"X1"});

    const DsepOracle ga(fixtures::m_bias());
    CHECK(boundary_pointwise(ga, BoundaryKind::Outcome, VertexSet{"U1", "U2", "L"}).boundary ==
          VertexSet{"U2"});
    CHECK(boundary_pointwise(ga, BoundaryKind::Treatment, VertexSet{"U1", "U2", "L"}).boundary ==
          VertexSet{"U1"});

    const auto empty = boundary_pointwise(gb, BoundaryKind::Treatment, VertexSet{});
    CHECK(empty.boundary == VertexSet{});
    CHECK(empty.oracle_calls == 0);
}

TEST_CASE("stepwise boundary follows the backward elimination order") {
    const DsepOracle oracle(fixtures::chain_confounder());

    const auto forward = boundary_stepwise(oracle, BoundaryKind::Treatment, {"X1", "X2"});
    CHECK(forward.boundary == VertexSet{"X1"});
    REQUIRE(forward.steps.size() == 2);
    CHECK(forward.steps[0].vertex == "X1");
    CHECK_FALSE(forward.steps[0].independent);  // treatment depends on X1 given X2
    CHECK(forward.steps[0].retained);
    CHECK(forward.steps[1].vertex == "X2");
    CHECK(forward.steps[1].independent);  // treatment independent of X2 given X1
    CHECK_FALSE(forward.steps[1].retained);
    CHECK(forward.oracle_calls == 2);

    // Order does not change the answer.
    const auto reversed = boundary_stepwise(oracle, BoundaryKind::Treatment, {"X2", "X1"});
    CHECK(reversed.boundary == VertexSet{"X1"});

    CHECK(boundary_stepwise(oracle, BoundaryKind::Treatment, {}).boundary == VertexSet{});
    CHECK_THROWS_AS(
        (void)boundary_stepwise(oracle, BoundaryKind::Treatment, {"X1", "X1"}),
        std::invalid_argument);
}

TEST_CASE("boundary combination rules") {
    const DsepOracle gb(fixtures::chain_confounder());
    const VertexSet sb{"X1", "X2"};
    CHECK(combine(gb, CombineRule::Intersect, sb) == VertexSet{});
    CHECK(combine(gb, CombineRule::Union, sb) == VertexSet{"X1", "X2"});
    CHECK(combine(gb, CombineRule::TreatmentThenOutcome, sb) == VertexSet{"X1"});
    CHECK(combine(gb, CombineRule::OutcomeThenTreatment, sb) == VertexSet{"X2"});

    const DsepOracle ga(fixtures::m_bias());
    const VertexSet sa{"U1", "U2", "L"};
    CHECK(combine(ga, CombineRule::Intersect, sa) == VertexSet{});
    CHECK(combine(ga, CombineRule::Union, sa) == VertexSet{"U1", "U2"});
    CHECK(combine(ga, CombineRule::TreatmentThenOutcome, sa) == VertexSet{});
    CHECK(combine(ga, CombineRule::OutcomeThenTreatment, sa) == VertexSet{});
}

TEST_CASE("alternating reduction to a stable set") {
    const DsepOracle gb(fixtures::chain_confounder());
    CHECK(reduce_alternating(gb, ReduceStart::TreatmentFirst, VertexSet{"X1", "X2"}) ==
          VertexSet{"X1"});
    CHECK(reduce_alternating(gb, ReduceStart::OutcomeFirst, VertexSet{"X1", "X2"}) ==
          VertexSet{"X2"});

    const DsepOracle ga(fixtures::m_bias());
    CHECK(reduce_alternating(ga, ReduceStart::TreatmentFirst, VertexSet{"U1", "U2", "L"}) ==
          VertexSet{});
    CHECK(reduce_alternating(ga, ReduceStart::OutcomeFirst, VertexSet{"U1", "U2", "L"}) ==
          VertexSet{});
}

TEST_CASE("stability fixpoint") {
    const DsepOracle gb(fixtures::chain_confounder());
    CHECK(verify_stability(gb, VertexSet{"X1"}));
    CHECK_FALSE(verify_stability(gb, VertexSet{"X1", "X2"}));
    CHECK(verify_stability(gb, VertexSet{}));
}

TEST_CASE("oracle bookkeeping") {
    const DsepOracle oracle(fixtures::chain_confounder());
    oracle.reset_calls();
    (void)oracle.query(VertexSet{"A"}, VertexSet{"X2"}, VertexSet{"X1"});
    (void)oracle.query(VertexSet{"A"}, VertexSet{}, VertexSet{});  // empty side: trivially true
    CHECK(oracle.calls() == 2);
    CHECK(oracle.query(VertexSet{"A"}, VertexSet{}, VertexSet{}));
    CHECK(oracle.treatment() == "A");
    CHECK(oracle.outcome() == "Y");
}
