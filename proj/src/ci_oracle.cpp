#include "confsel/ci_oracle.hpp"

#include "confsel/dsep.hpp"

namespace confsel {

DsepOracle::DsepOracle(Dag g) : CiOracle(g.treatment(), g.outcome()), graph_(std::move(g)) {}

bool DsepOracle::query_impl(const VertexSet& xs, const VertexSet& ys,
                            const VertexSet& given) const {
    return d_separated(graph_, xs, ys, given);
}

}  // namespace confsel
