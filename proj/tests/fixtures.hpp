#ifndef CONFSEL_TESTS_FIXTURES_HPP
#define CONFSEL_TESTS_FIXTURES_HPP

#include <string>

#include "confsel/graph_io.hpp"
#include "confsel/sem.hpp"

namespace fixtures {

// M-bias graph: two latent causes flanking an observed collider between
// treatment and outcome. The empty set is a sufficient adjustment set;
// conditioning on L is not.
inline const char* kMBiasCg = R"(# M-bias fixture
node A role=treatment
node Y role=outcome
node U1 role=covariate latent
node U2 role=covariate latent
node L role=covariate
edge U1 A
edge U1 L
edge U2 L
edge U2 Y
edge A Y
coef U1 A 1.0
coef U1 L 1.0
coef U2 L 1.0
coef U2 Y 1.0
coef A Y 1.5
noise A 1.0
noise Y 1.0
noise U1 1.0
noise U2 1.0
noise L 1.0
)";

// Chain-confounding graph: X1 confounds through X2; both {X1} and {X2} are
// minimal sufficient adjustment sets.
inline const char* kChainConfounderCg = R"(# chain-confounder fixture
node A role=treatment
node Y role=outcome
node X1 role=covariate
node X2 role=covariate
edge X1 A
edge X1 X2
edge X2 Y
edge A Y
coef X1 A 0.8
coef X1 X2 0.7
coef X2 Y 0.6
coef A Y 1.5
noise A 1.0
noise Y 1.0
noise X1 1.0
noise X2 1.0
)";

// Ground-graph fixture for causal closure: the closure of {S1,S2,A,Y} picks
// up Z1 and Z3 but neither Z2 nor Z4.
inline const char* kClosureCg = R"(# closure fixture
node A role=treatment
node Y role=outcome
node S1 role=covariate
node S2 role=covariate
node Z1 role=covariate
node Z2 role=covariate
node Z3 role=covariate
node Z4 role=covariate
edge A Y
edge S1 A
edge S1 Y
edge S2 A
edge S2 Y
edge Z1 S1
edge Z1 S2
edge Z2 A
edge Z3 Z1
edge Z3 Z4
edge Z4 S1
)";

// Three-vertex chain X -> A -> Y with unit coefficients and noises.
inline const char* kChainCg = R"(node X role=covariate
node A role=treatment
node Y role=outcome
edge X A
edge A Y
coef X A 1.0
coef A Y 1.0
noise X 1.0
noise A 1.0
noise Y 1.0
)";

inline confsel::Dag m_bias() { return confsel::parse_cg_string(kMBiasCg).dag; }

// Same shape as the M-bias fixture with every covariate observed, for
// scenarios that treat U1, U2 as measurable candidates.
inline confsel::Dag m_bias_observed() {
    using confsel::VertexDecl;
    using confsel::VertexRole;
    return confsel::Dag({{"A", VertexRole::Treatment},
                         {"Y", VertexRole::Outcome},
                         {"U1", VertexRole::Covariate},
                         {"U2", VertexRole::Covariate},
                         {"L", VertexRole::Covariate}},
                        {{"U1", "A"}, {"U1", "L"}, {"U2", "L"}, {"U2", "Y"}, {"A", "Y"}});
}

inline confsel::Dag chain_confounder() {
    return confsel::parse_cg_string(kChainConfounderCg).dag;
}

inline confsel::Dag closure_example() { return confsel::parse_cg_string(kClosureCg).dag; }

inline confsel::LinearSem m_bias_sem() {
    return confsel::LinearSem::from_parsed(confsel::parse_cg_string(kMBiasCg));
}

inline confsel::LinearSem chain_confounder_sem() {
    return confsel::LinearSem::from_parsed(confsel::parse_cg_string(kChainConfounderCg));
}

inline confsel::LinearSem chain_sem() {
    return confsel::LinearSem::from_parsed(confsel::parse_cg_string(kChainCg));
}

}  // namespace fixtures

#endif
