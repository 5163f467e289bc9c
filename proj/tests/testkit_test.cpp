#include "doctest.h"

#include "confsel/adjustment.hpp"
#include "confsel/ci_oracle.hpp"
#include "confsel/dsep.hpp"
#include "confsel/testkit.hpp"
#include "fixtures.hpp"

using namespace confsel;
namespace tk = confsel::testkit;

TEST_CASE("path-enumeration d-separation agrees with the worked examples") {
    const Dag ga = fixtures::m_bias();
    // All query triples on the fixture.
    const auto& names = ga.vertices().names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const VertexSet rest = ga.vertices() - VertexSet{names[i], names[j]};
            const auto& pool = rest.names();
            for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
                std::vector<std::string> given;
                for (std::size_t b = 0; b < pool.size(); ++b) {
                    if (mask & (1u << b)) given.push_back(pool[b]);
                }
                const VertexSet l(std::move(given));
                CHECK(tk::dsep_bruteforce(ga, VertexSet{names[i]}, VertexSet{names[j]}, l) ==
                      d_separated(ga, VertexSet{names[i]}, VertexSet{names[j]}, l));
            }
        }
    }

    const Dag gb = fixtures::chain_confounder();
    CHECK(tk::dsep_bruteforce(gb, VertexSet{"A"}, VertexSet{"X2"}, VertexSet{"X1"}));

    const Dag edgeless({{"x", VertexRole::Treatment}, {"y", VertexRole::Outcome}}, {});
    CHECK(tk::dsep_bruteforce(edgeless, VertexSet{"x"}, VertexSet{"y"}, VertexSet{}));

    const Dag big = tk::random_dag({.vertex_count = 13, .edge_prob = 0.2, .seed = 1});
    CHECK_THROWS_AS(
        (void)tk::dsep_bruteforce(big, VertexSet{"A"}, VertexSet{"Y"}, VertexSet{}),
        std::invalid_argument);
}

TEST_CASE("blanket family enumeration") {
    const DsepOracle oracle(fixtures::chain_confounder());
    const VertexSet s{"X1", "X2"};
    CHECK(tk::enumerate_blanket_family(oracle, BoundaryKind::Treatment, s) ==
          std::vector<VertexSet>{VertexSet{"X1"}, VertexSet{"X1", "X2"}});
    CHECK(tk::enumerate_blanket_family(oracle, BoundaryKind::Outcome, s) ==
          std::vector<VertexSet>{VertexSet{"X2"}, VertexSet{"X1", "X2"}});
    CHECK(tk::enumerate_blanket_family(oracle, BoundaryKind::Treatment, VertexSet{}) ==
          std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("closure by intersection of closed supersets") {
    const Dag gc = fixtures::closure_example();
    CHECK(tk::closure_bruteforce(gc, VertexSet{"S1", "S2", "A", "Y"}) ==
          VertexSet{"Z1", "Z3", "S1", "S2", "A", "Y"});
    CHECK(tk::closure_bruteforce(gc, gc.vertices()) == gc.vertices());

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Dag g = tk::random_dag({.vertex_count = 7, .edge_prob = 0.35, .seed = seed});
        const VertexSet h{g.treatment(), g.outcome()};
        CHECK(tk::closure_bruteforce(g, h) == causal_closure(g, h));
    }
}

TEST_CASE("random graph generation") {
    const tk::RandomDagSpec forced{.vertex_count = 2, .edge_prob = 1.0, .seed = 5};
    const Dag two = tk::random_dag(forced);
    CHECK(two.vertices() == VertexSet{"A", "Y"});
    CHECK(two.has_edge("A", "Y"));

    const tk::RandomDagSpec spec{.vertex_count = 8, .edge_prob = 0.3, .seed = 77};
    const Dag once = tk::random_dag(spec);
    const Dag twice = tk::random_dag(spec);
    CHECK(once.vertices() == twice.vertices());
    CHECK(once.edges() == twice.edges());

    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        // Construction validates every invariant; reaching here is the test.
        const Dag g = tk::random_dag(
            {.vertex_count = 8, .edge_prob = 0.3, .latent_fraction = 0.3, .seed = seed});
        CHECK(g.vertex_count() == 8);
    }

    const Dag ordered = tk::random_dag({.vertex_count = 6,
                                        .edge_prob = 0.4,
                                        .seed = 3,
                                        .covariates_precede_treatment = true});
    CHECK(descendants(ordered, VertexSet{ordered.treatment()})
              .is_subset_of(VertexSet{"A", "Y"}));

    CHECK_THROWS_AS((void)tk::random_dag({.vertex_count = 1, .seed = 1}),
                    std::invalid_argument);
}

TEST_CASE("exhaustive DAG sweeps visit the expected counts") {
    std::size_t labeled3 = 0;
    tk::for_each_labeled_dag(3, [&](const Dag&) { ++labeled3; });
    CHECK(labeled3 == 25);

    std::size_t labeled4 = 0;
    tk::for_each_labeled_dag(4, [&](const Dag&) { ++labeled4; });
    CHECK(labeled4 == 543);

    std::size_t ordered4 = 0;
    tk::for_each_ordered_dag(4, [&](const Dag&) { ++ordered4; });
    CHECK(ordered4 == 64);
}

TEST_CASE("property suites pass at reduced scale") {
    tk::PropertyOptions options;
    options.exhaustive_vertices = 4;
    options.transitivity_vertices = 5;
    options.random_graphs = 24;
    options.random_vertices = 7;
    const auto results = tk::property_suites(options);
    for (const auto& suite : results) {
        INFO(suite.name);
        for (const auto& failure : suite.failures) {
            INFO(failure.description);
            INFO(failure.graph_cg);
        }
        CHECK(suite.passed());
        CHECK(suite.cases > 0);
    }
    const std::string report = tk::suites_to_json(results);
    CHECK(report.find("dsep-dual-equivalence") != std::string::npos);
    CHECK(report.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("the harness notices an injected collider bug") {
    // Inverting the collider test must break dual-implementation agreement
    // and serialize a counterexample graph.
    tk::PropertyOptions options;
    options.exhaustive_vertices = 3;
    options.transitivity_vertices = 3;
    options.random_graphs = 2;
    options.canary_invert_collider = true;
    const auto results = tk::property_suites(options);
    bool dual_failed = false;
    for (const auto& suite : results) {
        if (suite.name == "dsep-dual-equivalence" && !suite.passed()) {
            dual_failed = true;
            CHECK_FALSE(suite.failures.front().graph_cg.empty());
        }
    }
    CHECK(dual_failed);
}
