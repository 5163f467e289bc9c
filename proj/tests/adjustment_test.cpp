#include "doctest.h"

#include "confsel/adjustment.hpp"
#include "fixtures.hpp"

using namespace confsel;

TEST_CASE("back-door blocking") {
    const Dag gb = fixtures::chain_confounder();
    CHECK(blocks_all_backdoor(gb, VertexSet{"X1"}));
    CHECK_FALSE(blocks_all_backdoor(gb, VertexSet{}));

    const Dag ga = fixtures::m_bias();
    CHECK_FALSE(blocks_all_backdoor(ga, VertexSet{"L"}));

    CHECK_THROWS_AS((void)blocks_all_backdoor(gb, VertexSet{"Y"}), std::invalid_argument);
}

TEST_CASE("whole-candidate-set criterion") {
    const Dag ga = fixtures::m_bias();
    const auto on_l = criterion_pretreatment(ga, VertexSet{"L"});
    CHECK(on_l.output_c == VertexSet{"L"});
    CHECK(on_l.sufficient == false);
    CHECK(on_l.criterion == "pretreatment");

    const Dag gb = fixtures::chain_confounder();
    const auto on_both = criterion_pretreatment(gb, VertexSet{"X1", "X2"});
    CHECK(on_both.output_c == VertexSet{"X1", "X2"});
    CHECK(on_both.sufficient == true);

    const auto on_empty = criterion_pretreatment(gb, VertexSet{});
    CHECK(on_empty.output_c == VertexSet{});
    CHECK(on_empty.sufficient == false);  // the back-door path stays open

    // Post-treatment candidates are rejected outright.
    const Dag mediator({{"A", VertexRole::Treatment},
                        {"M", VertexRole::Covariate},
                        {"Y", VertexRole::Outcome}},
                       {{"A", "M"}, {"M", "Y"}});
    CHECK_THROWS_AS((void)criterion_pretreatment(mediator, VertexSet{"M"}),
                    std::invalid_argument);
}

TEST_CASE("common-cause criterion") {
    const Dag gb = fixtures::chain_confounder();
    const auto on_x2 = criterion_conjunctive(gb, VertexSet{"X2"});
    CHECK(on_x2.output_c == VertexSet{});
    CHECK(on_x2.sufficient == false);

    const auto on_both = criterion_conjunctive(gb, VertexSet{"X1", "X2"});
    CHECK(on_both.output_c == VertexSet{"X1"});  // X1 reaches Y through X2
    CHECK(on_both.sufficient == true);

    // With the hidden causes treated as measurable candidates, the common
    // cause U1 is selected and blocks the open collider path.
    const Dag ga_obs = fixtures::m_bias_observed();
    const auto on_all = criterion_conjunctive(ga_obs, VertexSet{"U1", "U2", "L"});
    CHECK(on_all.output_c == VertexSet{"U1"});
    CHECK(on_all.sufficient == true);
}

TEST_CASE("ancestor-union criterion") {
    const Dag ga = fixtures::m_bias();
    const auto on_l = criterion_disjunctive(ga, VertexSet{"L"});
    CHECK(on_l.output_c == VertexSet{});  // L causes neither endpoint
    CHECK(on_l.sufficient == true);

    const Dag gb = fixtures::chain_confounder();
    const auto on_both = criterion_disjunctive(gb, VertexSet{"X1", "X2"});
    CHECK(on_both.output_c == VertexSet{"X1", "X2"});
    CHECK(on_both.sufficient == true);

    CHECK(criterion_disjunctive(gb, VertexSet{}).output_c == VertexSet{});
}

TEST_CASE("latent candidates are dropped with a warning") {
    const Dag ga = fixtures::m_bias();  // U1, U2 latent here
    const auto report = criterion_conjunctive(ga, VertexSet{"U1", "U2", "L"});
    CHECK(report.output_c == VertexSet{});
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings.front().find("U1") != std::string::npos);
    CHECK(report.input_s == VertexSet{"U1", "U2", "L"});
}

TEST_CASE("existence of a sufficient subset") {
    const Dag ga = fixtures::m_bias();
    CHECK(exists_sufficient_subset(ga, VertexSet{"L"}));

    const Dag confounded({{"A", VertexRole::Treatment},
                          {"Y", VertexRole::Outcome},
                          {"U", VertexRole::Covariate, true}},
                         {{"U", "A"}, {"U", "Y"}, {"A", "Y"}});
    CHECK_FALSE(exists_sufficient_subset(confounded, VertexSet{}));

    const Dag gb = fixtures::chain_confounder();
    CHECK(exists_sufficient_subset(gb, VertexSet{"X2"}));
}

TEST_CASE("minimal sufficient adjustment sets") {
    const Dag gb = fixtures::chain_confounder();
    CHECK(enumerate_minimal_sufficient_sets(gb, VertexSet{"X1", "X2"}) ==
          std::vector<VertexSet>{VertexSet{"X1"}, VertexSet{"X2"}});

    const Dag ga = fixtures::m_bias();
    CHECK(enumerate_minimal_sufficient_sets(ga, VertexSet{"L"}) ==
          std::vector<VertexSet>{VertexSet{}});

    const Dag gc = fixtures::closure_example();
    CHECK(enumerate_minimal_sufficient_sets(gc, VertexSet{"S1", "S2"}) ==
          std::vector<VertexSet>{VertexSet{"S1", "S2"}});

    CHECK_THROWS_AS(
        (void)enumerate_minimal_sufficient_sets(gc, pretreatment_covariates(gc), 3),
        std::invalid_argument);
}
