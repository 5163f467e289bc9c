#include "doctest.h"

#include "confsel/dag.hpp"
#include "confsel/errors.hpp"
#include "confsel/graph_io.hpp"
#include "fixtures.hpp"

using namespace confsel;

TEST_CASE("dag construction validates its invariants") {
    SUBCASE("cycles are rejected") {
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment}, {"Y", VertexRole::Outcome}},
                            {{"A", "Y"}, {"Y", "A"}}),
                        std::invalid_argument);
    }
    SUBCASE("outcome must not cause the treatment") {
        CHECK_THROWS_WITH_AS(Dag({{"A", VertexRole::Treatment},
                                  {"Y", VertexRole::Outcome},
                                  {"M", VertexRole::Covariate}},
                                 {{"Y", "M"}, {"M", "A"}}),
                             "outcome is an ancestor of the treatment", std::invalid_argument);
    }
    SUBCASE("exactly one treatment and outcome") {
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment}, {"B", VertexRole::Treatment}}, {}),
                        std::invalid_argument);
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment}, {"B", VertexRole::Covariate}}, {}),
                        std::invalid_argument);
    }
    SUBCASE("latent only on covariates") {
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment, true}, {"Y", VertexRole::Outcome}}, {}),
                        std::invalid_argument);
    }
    SUBCASE("identifiers are checked") {
        CHECK_THROWS_AS(Dag({{"1bad", VertexRole::Treatment}, {"Y", VertexRole::Outcome}}, {}),
                        std::invalid_argument);
    }
    SUBCASE("self loops and duplicate edges are rejected") {
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment}, {"Y", VertexRole::Outcome}},
                            {{"A", "A"}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(Dag({{"A", VertexRole::Treatment}, {"Y", VertexRole::Outcome}},
                            {{"A", "Y"}, {"A", "Y"}}),
                        std::invalid_argument);
    }
    SUBCASE("unknown vertices in queries raise the dedicated error") {
        const Dag g = fixtures::m_bias();
        CHECK_THROWS_AS((void)g.index_of("nope"), UnknownVertexError);
        CHECK_THROWS_AS((void)ancestors(g, VertexSet{"nope"}), UnknownVertexError);
    }
}

TEST_CASE("ancestor and descendant closures") {
    const Dag gc = fixtures::closure_example();
    CHECK(ancestors(gc, VertexSet{"S1"}) == VertexSet{"S1", "Z1", "Z4", "Z3"});

    const Dag ga = fixtures::m_bias();
    CHECK(ancestors(ga, VertexSet{"Y"}) == VertexSet{"Y", "A", "U1", "U2"});
    CHECK(ancestors(ga, VertexSet{}) == VertexSet{});

    CHECK(descendants(ga, VertexSet{"U1"}) == VertexSet{"U1", "A", "L", "Y"});
    const Dag gb = fixtures::chain_confounder();
    CHECK(descendants(gb, VertexSet{"Y"}) == VertexSet{"Y"});
    CHECK(nondescendants(ga, VertexSet{"U1"}) == VertexSet{"U2"});
}

TEST_CASE("back-door mutilation deletes exactly the edges out of the treatment") {
    const Dag ga = fixtures::m_bias();
    const Dag cut = mutilate_backdoor(ga);
    CHECK(cut.vertices() == ga.vertices());
    CHECK_FALSE(cut.has_edge("A", "Y"));
    CHECK(cut.edges().size() == ga.edges().size() - 1);
    CHECK(cut.treatment() == "A");
    CHECK(cut.is_latent("U1"));

    // A graph with no edges out of the treatment is a fixpoint.
    const Dag fixed = mutilate_backdoor(cut);
    CHECK(fixed.edges() == cut.edges());

    const Dag gb_cut = mutilate_backdoor(fixtures::chain_confounder());
    CHECK_FALSE(gb_cut.has_edge("A", "Y"));
    CHECK(gb_cut.has_edge("X1", "A"));
    CHECK(gb_cut.has_edge("X2", "Y"));
}

TEST_CASE("single-world split of the treatment") {
    const Dag ga = fixtures::m_bias();
    const Swig swig = make_swig(ga);
    CHECK(swig.random_part == "A");
    CHECK(swig.fixed_part == "a");
    CHECK(swig.graph.children_of(swig.graph.index_of("A")).empty());
    CHECK(swig.graph.parents_of(swig.graph.index_of("a")).empty());
    CHECK(swig.graph.has_edge("U1", "A"));
    CHECK(swig.graph.has_edge("a", "Y"));
    CHECK(swig.relabeled == std::map<std::string, std::string>{{"Y", "Y(a)"}});

    const Dag gb = fixtures::chain_confounder();
    CHECK(make_swig(gb).relabeled == std::map<std::string, std::string>{{"Y", "Y(a)"}});

    const Dag minimal({{"A", VertexRole::Treatment}, {"Y", VertexRole::Outcome}}, {{"A", "Y"}});
    const Swig split = make_swig(minimal);
    CHECK(split.graph.children_of(split.graph.index_of("A")).empty());
    CHECK(split.graph.parents_of(split.graph.index_of("A")).empty());
    CHECK(split.graph.has_edge("a", "Y"));

    // Edge sets partition the original under the split.
    CHECK(split.graph.edges().size() == minimal.edges().size());
    CHECK(swig.graph.edges().size() == ga.edges().size());
}

TEST_CASE("non-trivial common ancestors") {
    const Dag gc = fixtures::closure_example();
    CHECK(nontrivial_common_ancestors(gc, "S1", "S2") == VertexSet{"Z1", "Z3"});
    // Z2 reaches the pair only through the treatment; the deeper ancestors
    // only through S1/S2.
    CHECK(nontrivial_common_ancestors(gc, "A", "Y") == VertexSet{"S1", "S2"});

    const Dag chain({{"Z", VertexRole::Covariate},
                     {"X", VertexRole::Treatment},
                     {"Y", VertexRole::Outcome}},
                    {{"Z", "X"}, {"X", "Y"}});
    CHECK(nontrivial_common_ancestors(chain, "X", "Y") == VertexSet{});

    CHECK_THROWS_AS((void)nontrivial_common_ancestors(gc, "S1", "S1"), std::invalid_argument);
    CHECK_THROWS_AS((void)nontrivial_common_ancestors(gc, "S1", "nope"), UnknownVertexError);
}

TEST_CASE("causal closure") {
    const Dag gc = fixtures::closure_example();
    CHECK(is_causally_closed(gc, VertexSet{"Z1", "Z3", "S1", "S2", "A", "Y"}));
    CHECK_FALSE(is_causally_closed(gc, VertexSet{"S1", "S2", "A", "Y"}));
    CHECK(is_causally_closed(gc, gc.vertices()));

    CHECK(causal_closure(gc, VertexSet{"S1", "S2", "A", "Y"}) ==
          VertexSet{"Z1", "Z3", "S1", "S2", "A", "Y"});
    CHECK(causal_closure(gc, gc.vertices()) == gc.vertices());

    const Dag chain({{"Z", VertexRole::Covariate},
                     {"X", VertexRole::Treatment},
                     {"Y", VertexRole::Outcome}},
                    {{"Z", "X"}, {"X", "Y"}});
    CHECK(causal_closure(chain, VertexSet{"X", "Y"}) == VertexSet{"X", "Y"});
}

TEST_CASE("relevant pre-treatment covariates via closure") {
    const Dag gc = fixtures::closure_example();
    CHECK(relevant_pretreatment(gc, VertexSet{"S1", "S2"}) == VertexSet{"Z1", "Z3", "S1", "S2"});

    const Dag gb = fixtures::chain_confounder();
    CHECK(relevant_pretreatment(gb, VertexSet{"X1", "X2"}) == VertexSet{"X1", "X2"});

    const Dag lone({{"A", VertexRole::Treatment}, {"Y", VertexRole::Outcome}}, {{"A", "Y"}});
    CHECK(relevant_pretreatment(lone, VertexSet{}) == VertexSet{});

    // The M-bias fixture pulls its latent causes into the relevant set.
    const Dag ga = fixtures::m_bias();
    CHECK(relevant_pretreatment(ga, VertexSet{"L"}) == VertexSet{"L", "U1", "U2"});
    CHECK_THROWS_AS((void)relevant_pretreatment(ga, VertexSet{"U1"}), std::invalid_argument);
}

TEST_CASE("graph files parse with line-accurate errors") {
    SUBCASE("round trip preserves structure") {
        const ParsedGraph parsed = parse_cg_string(fixtures::kMBiasCg);
        const ParsedGraph again = parse_cg_string(to_cg_string(parsed));
        CHECK(again.dag.vertices() == parsed.dag.vertices());
        CHECK(again.dag.edges() == parsed.dag.edges());
        CHECK(again.dag.latent() == parsed.dag.latent());
        CHECK(again.coef == parsed.coef);
        CHECK(again.noise == parsed.noise);
    }
    SUBCASE("unknown directive") {
        try {
            parse_cg_string("node A role=treatment\nnode Y role=outcome\nfrobnicate A Y\n");
            FAIL("expected a parse error");
        } catch (const GraphParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("edge before declaration") {
        try {
            parse_cg_string("node A role=treatment\nedge A Y\nnode Y role=outcome\n");
            FAIL("expected a parse error");
        } catch (const GraphParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("bad number in coef") {
        const std::string text =
            "node A role=treatment\nnode Y role=outcome\nedge A Y\ncoef A Y twelve\n";
        try {
            parse_cg_string(text);
            FAIL("expected a parse error");
        } catch (const GraphParseError& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("latent on the treatment") {
        CHECK_THROWS_AS(parse_cg_string("node A role=treatment latent\nnode Y role=outcome\n"),
                        GraphParseError);
    }
    SUBCASE("comments and blank lines are ignored") {
        const ParsedGraph parsed =
            parse_cg_string("# heading\n\nnode A role=treatment # trailing\nnode Y role=outcome\n");
        CHECK(parsed.dag.vertex_count() == 2);
    }
}
