#include "confsel/adjustment.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "confsel/dsep.hpp"

namespace confsel {

namespace {

void require_pretreatment(const Dag& g, const VertexSet& s) {
    const VertexSet ay{g.treatment(), g.outcome()};
    if (s.intersects(ay)) {
        throw std::invalid_argument("candidate set may not contain treatment or outcome");
    }
    const VertexSet post = descendants(g, VertexSet{g.treatment()}) - VertexSet{g.treatment()};
    if (s.intersects(post)) {
        throw std::invalid_argument("candidate set contains descendants of the treatment: " +
                                    (s & post).to_string());
    }
}

// Latent vertices are not selectable; drop them up front and say so.
VertexSet drop_latent(const Dag& g, const VertexSet& s, std::vector<std::string>& warnings) {
    const VertexSet hidden = s & g.latent();
    if (hidden.empty()) return s;
    warnings.push_back("latent vertices removed from candidate set: " + hidden.to_string());
    return s - hidden;
}

}  // namespace

bool blocks_all_backdoor(const Dag& g, const VertexSet& c) { return ignorability_holds(g, c); }

SelectionReport criterion_pretreatment(const Dag& g, const VertexSet& s) {
    require_pretreatment(g, s);
    SelectionReport report;
    report.criterion = "pretreatment";
    report.assumption_context = "candidate-set-sufficient";
    report.input_s = s;
    report.output_c = drop_latent(g, s, report.warnings);
    report.sufficient = blocks_all_backdoor(g, report.output_c);
    report.sufficiency_basis = "recomputed-from-graph";
    report.queries_used = 1;
    return report;
}

SelectionReport criterion_conjunctive(const Dag& g, const VertexSet& s) {
    require_pretreatment(g, s);
    SelectionReport report;
    report.criterion = "conjunctive";
    report.assumption_context = "all-relevant-covariates-observed";
    report.input_s = s;
    const VertexSet candidates = drop_latent(g, s, report.warnings);
    report.output_c = candidates & ancestors(g, VertexSet{g.treatment()}) &
                      ancestors(g, VertexSet{g.outcome()});
    report.sufficient = blocks_all_backdoor(g, report.output_c);
    report.sufficiency_basis = "recomputed-from-graph";
    report.queries_used = 1;
    return report;
}

SelectionReport criterion_disjunctive(const Dag& g, const VertexSet& s) {
    require_pretreatment(g, s);
    SelectionReport report;
    report.criterion = "disjunctive";
    report.assumption_context = "some-subset-sufficient";
    report.input_s = s;
    const VertexSet candidates = drop_latent(g, s, report.warnings);
    report.output_c = candidates & (ancestors(g, VertexSet{g.treatment()}) |
                                    ancestors(g, VertexSet{g.outcome()}));
    report.sufficient = blocks_all_backdoor(g, report.output_c);
    report.sufficiency_basis = "recomputed-from-graph";
    report.queries_used = 1;
    return report;
}

bool exists_sufficient_subset(const Dag& g, const VertexSet& s) {
    require_pretreatment(g, s);
    const Dag deleted = mutilate_backdoor(g);
    const VertexSet rest =
        g.vertices() - (s | VertexSet{g.treatment(), g.outcome()});
    return !inducing_path_exists(deleted, g.treatment(), g.outcome(), rest);
}

std::vector<VertexSet> enumerate_minimal_sufficient_sets(const Dag& g, const VertexSet& s,
                                                         std::size_t cap) {
    require_pretreatment(g, s);
    if (s.size() > cap) {
        throw std::invalid_argument("candidate set exceeds the enumeration cap of " +
                                    std::to_string(cap) + " vertices");
    }

    const Dag deleted = mutilate_backdoor(g);
    const VertexSet treatment_only{g.treatment()};
    const VertexSet outcome_only{g.outcome()};
    const auto sufficient = [&](const VertexSet& c) {
        return d_separated(deleted, treatment_only, outcome_only, c);
    };

    const auto& pool = s.names();
    const std::size_t k = pool.size();
    std::vector<VertexSet> minimal;

    // Subsets in size order; any superset of a known minimal set is pruned,
    // so survivors that test sufficient are inclusion-minimal.
    std::vector<std::vector<std::size_t>> by_size(k + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    std::vector<std::size_t> minimal_masks;
    for (std::size_t size = 0; size <= k; ++size) {
        for (std::size_t mask : by_size[size]) {
            bool dominated = false;
            for (std::size_t m : minimal_masks) {
                if ((mask & m) == m) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) continue;
            std::vector<std::string> members;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) members.push_back(pool[i]);
            }
            VertexSet c(std::move(members));
            if (sufficient(c)) {
                minimal_masks.push_back(mask);
                minimal.push_back(std::move(c));
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.names() < b.names();
    });
    return minimal;
}

}  // namespace confsel
