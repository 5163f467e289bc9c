#ifndef CONFSEL_DAG_HPP
#define CONFSEL_DAG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confsel/vertex_set.hpp"

namespace confsel {

enum class VertexRole { Treatment, Outcome, Covariate };

struct VertexDecl {
    std::string name;
    VertexRole role = VertexRole::Covariate;
    bool latent = false;
};

/// A causal DAG over named vertices with a designated binary treatment and an
/// outcome; covariates may be marked latent. Immutable after construction, so
/// instances can be queried concurrently. Construction validates:
///   - identifiers match [A-Za-z_][A-Za-z0-9_]*, no duplicates
///   - exactly one treatment and one outcome, distinct
///   - latent only on covariates
///   - edges reference declared vertices, no self-loops or duplicates
///   - acyclicity, and the outcome is not an ancestor of the treatment
class Dag {
public:
    Dag(std::vector<VertexDecl> vertices, std::vector<std::pair<std::string, std::string>> edges);

    const VertexSet& vertices() const { return vertex_set_; }
    const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

    const std::string& treatment() const { return names_[treatment_]; }
    const std::string& outcome() const { return names_[outcome_]; }

    VertexSet latent() const;
    VertexSet covariates() const;
    VertexSet observed_covariates() const;

    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& src, const std::string& dst) const;
    bool is_latent(const std::string& name) const;
    VertexRole role(const std::string& name) const;

    // Index-level interface used by the algorithms; names are held in
    // canonical order, so index i corresponds to vertices().names()[i].
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int index_of(const std::string& name) const;  // throws UnknownVertexError
    const std::string& name_of(int index) const { return names_[static_cast<std::size_t>(index)]; }
    const std::vector<int>& parents_of(int index) const {
        return parents_[static_cast<std::size_t>(index)];
    }
    const std::vector<int>& children_of(int index) const {
        return children_[static_cast<std::size_t>(index)];
    }
    int treatment_index() const { return treatment_; }
    int outcome_index() const { return outcome_; }
    bool is_latent(int index) const { return latent_[static_cast<std::size_t>(index)]; }

    /// Vertex indices in a deterministic topological order.
    const std::vector<int>& topological_order() const { return topo_order_; }

    std::vector<int> indices_of(const VertexSet& set) const;
    VertexSet set_of(const std::vector<int>& indices) const;

private:
    std::vector<std::string> names_;  // canonical order
    std::map<std::string, int> index_;
    std::vector<std::pair<std::string, std::string>> edges_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<char> latent_;
    std::vector<int> topo_order_;
    int treatment_ = -1;
    int outcome_ = -1;
    VertexSet vertex_set_;
};

/// Reflexive-transitive ancestor closure of `seed` (a vertex is an ancestor
/// of itself).
VertexSet ancestors(const Dag& g, const VertexSet& seed);

/// Reflexive descendant closure of `seed`.
VertexSet descendants(const Dag& g, const VertexSet& seed);

/// Complement of descendants(g, seed) within the vertex set.
VertexSet nondescendants(const Dag& g, const VertexSet& seed);

/// All observed covariates that are nondescendants of the treatment: the
/// default candidate set for selection.
VertexSet pretreatment_covariates(const Dag& g);

/// Deletes every edge leaving the treatment; roles are preserved. Paths
/// between treatment and outcome in the result are exactly the back-door
/// paths of `g`.
Dag mutilate_backdoor(const Dag& g);

/// The treatment vertex split into a random part (keeps edges in) and a
/// fixed part (keeps edges out); descendants of the treatment carry
/// counterfactual labels. The labels are presentation metadata; graph
/// vertices keep their original names except for the added fixed part.
struct Swig {
    Dag graph;
    std::string random_part;
    std::string fixed_part;
    std::map<std::string, std::string> relabeled;
};

Swig make_swig(const Dag& g);

/// Common ancestors of v1 and v2 (excluding v1, v2 themselves) that have a
/// directed path to v1 or v2 on which no other vertex lies in the common
/// ancestor set. A path "goes through" a set if any vertex on it other than
/// the origin, including the terminal endpoint, is in the set.
VertexSet nontrivial_common_ancestors(const Dag& g, const std::string& v1, const std::string& v2);

/// True iff every distinct pair in h has its non-trivial common ancestors
/// inside h.
bool is_causally_closed(const Dag& g, const VertexSet& h);

/// Least superset of h that is causally closed, computed by fixpoint
/// augmentation with non-trivial common ancestors of pairs.
VertexSet causal_closure(const Dag& g, const VertexSet& h);

/// causal_closure(s ∪ {treatment, outcome}) minus {treatment, outcome}: the
/// full set of covariates relevant to the effect. Every returned vertex is a
/// nondescendant of the treatment; that is checked after the fact.
VertexSet relevant_pretreatment(const Dag& g, const VertexSet& s);

}  // namespace confsel

#endif
