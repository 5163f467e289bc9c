#include "confsel/dag.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <stdexcept>

#include "confsel/errors.hpp"

namespace confsel {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

// Reflexive closure along the given adjacency (parents for ancestors,
// children for descendants).
std::vector<char> close_over(const Dag& g, const std::vector<int>& seed, bool upward) {
    std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack(seed);
    for (int v : seed) mark[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const auto& next = upward ? g.parents_of(v) : g.children_of(v);
        for (int u : next) {
            if (!mark[static_cast<std::size_t>(u)]) {
                mark[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    return mark;
}

VertexSet marks_to_set(const Dag& g, const std::vector<char>& mark) {
    std::vector<std::string> names;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (mark[static_cast<std::size_t>(i)]) names.push_back(g.name_of(i));
    }
    return VertexSet(std::move(names));
}

}  // namespace

Dag::Dag(std::vector<VertexDecl> vertices, std::vector<std::pair<std::string, std::string>> edges) {
    if (vertices.size() < 2) {
        throw std::invalid_argument("a causal DAG needs at least a treatment and an outcome");
    }
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexDecl& a, const VertexDecl& b) { return a.name < b.name; });

    names_.reserve(vertices.size());
    latent_.reserve(vertices.size());
    for (const auto& decl : vertices) {
        if (!valid_identifier(decl.name)) {
            throw std::invalid_argument("invalid vertex identifier: '" + decl.name + "'");
        }
        if (index_.count(decl.name)) {
            throw std::invalid_argument("duplicate vertex: " + decl.name);
        }
        const int idx = static_cast<int>(names_.size());
        index_[decl.name] = idx;
        names_.push_back(decl.name);
        latent_.push_back(decl.latent ? 1 : 0);
        switch (decl.role) {
            case VertexRole::Treatment:
                if (treatment_ >= 0) throw std::invalid_argument("more than one treatment vertex");
                treatment_ = idx;
                break;
            case VertexRole::Outcome:
                if (outcome_ >= 0) throw std::invalid_argument("more than one outcome vertex");
                outcome_ = idx;
                break;
            case VertexRole::Covariate:
                break;
        }
        if (decl.latent && decl.role != VertexRole::Covariate) {
            throw std::invalid_argument("latent marker is only allowed on covariates: " +
                                        decl.name);
        }
    }
    if (treatment_ < 0) throw std::invalid_argument("no treatment vertex declared");
    if (outcome_ < 0) throw std::invalid_argument("no outcome vertex declared");

    parents_.resize(names_.size());
    children_.resize(names_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [src, dst] : edges) {
        const auto si = index_.find(src);
        const auto di = index_.find(dst);
        if (si == index_.end()) throw std::invalid_argument("edge references unknown vertex: " + src);
        if (di == index_.end()) throw std::invalid_argument("edge references unknown vertex: " + dst);
        if (si->second == di->second) throw std::invalid_argument("self-loop on vertex: " + src);
        if (!seen.insert({si->second, di->second}).second) {
            throw std::invalid_argument("duplicate edge: " + src + " -> " + dst);
        }
        children_[static_cast<std::size_t>(si->second)].push_back(di->second);
        parents_[static_cast<std::size_t>(di->second)].push_back(si->second);
    }
    for (auto& adj : parents_) std::sort(adj.begin(), adj.end());
    for (auto& adj : children_) std::sort(adj.begin(), adj.end());

    // Canonical edge order follows the canonical vertex order.
    for (int src = 0; src < static_cast<int>(names_.size()); ++src) {
        for (int dst : children_[static_cast<std::size_t>(src)]) {
            edges_.emplace_back(names_[static_cast<std::size_t>(src)],
                                names_[static_cast<std::size_t>(dst)]);
        }
    }

    // Kahn's algorithm with a min-heap keeps the order deterministic.
    std::vector<int> indegree(names_.size(), 0);
    for (std::size_t v = 0; v < names_.size(); ++v) {
        indegree[v] = static_cast<int>(parents_[v].size());
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (std::size_t v = 0; v < names_.size(); ++v) {
        if (indegree[v] == 0) ready.push(static_cast<int>(v));
    }
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        topo_order_.push_back(v);
        for (int c : children_[static_cast<std::size_t>(v)]) {
            if (--indegree[static_cast<std::size_t>(c)] == 0) ready.push(c);
        }
    }
    if (topo_order_.size() != names_.size()) {
        throw std::invalid_argument("edge relation is cyclic");
    }

    vertex_set_ = VertexSet(names_);

    const auto an_treatment = close_over(*this, {treatment_}, /*upward=*/true);
    if (an_treatment[static_cast<std::size_t>(outcome_)]) {
        throw std::invalid_argument("outcome is an ancestor of the treatment");
    }
}

VertexSet Dag::latent() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (latent_[i]) names.push_back(names_[i]);
    }
    return VertexSet(std::move(names));
}

VertexSet Dag::covariates() const {
    return vertex_set_ - VertexSet{treatment(), outcome()};
}

VertexSet Dag::observed_covariates() const { return covariates() - latent(); }

bool Dag::has_vertex(const std::string& name) const { return index_.count(name) > 0; }

bool Dag::has_edge(const std::string& src, const std::string& dst) const {
    const auto si = index_.find(src);
    const auto di = index_.find(dst);
    if (si == index_.end() || di == index_.end()) return false;
    const auto& ch = children_[static_cast<std::size_t>(si->second)];
    return std::binary_search(ch.begin(), ch.end(), di->second);
}

bool Dag::is_latent(const std::string& name) const {
    return latent_[static_cast<std::size_t>(index_of(name))] != 0;
}

VertexRole Dag::role(const std::string& name) const {
    const int idx = index_of(name);
    if (idx == treatment_) return VertexRole::Treatment;
    if (idx == outcome_) return VertexRole::Outcome;
    return VertexRole::Covariate;
}

int Dag::index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVertexError(name);
    return it->second;
}

std::vector<int> Dag::indices_of(const VertexSet& set) const {
    std::vector<int> out;
    out.reserve(set.size());
    for (const auto& name : set) out.push_back(index_of(name));
    return out;
}

VertexSet Dag::set_of(const std::vector<int>& indices) const {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (int i : indices) names.push_back(name_of(i));
    return VertexSet(std::move(names));
}

VertexSet ancestors(const Dag& g, const VertexSet& seed) {
    return marks_to_set(g, close_over(g, g.indices_of(seed), /*upward=*/true));
}

VertexSet descendants(const Dag& g, const VertexSet& seed) {
    return marks_to_set(g, close_over(g, g.indices_of(seed), /*upward=*/false));
}

VertexSet nondescendants(const Dag& g, const VertexSet& seed) {
    return g.vertices() - descendants(g, seed);
}

VertexSet pretreatment_covariates(const Dag& g) {
    return (nondescendants(g, VertexSet{g.treatment()}) & g.observed_covariates());
}

Dag mutilate_backdoor(const Dag& g) {
    std::vector<VertexDecl> decls;
    decls.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        decls.push_back({g.name_of(i),
                         i == g.treatment_index()  ? VertexRole::Treatment
                         : i == g.outcome_index()  ? VertexRole::Outcome
                                                   : VertexRole::Covariate,
                         g.is_latent(i)});
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : g.edges()) {
        if (e.first != g.treatment()) edges.push_back(e);
    }
    return Dag(std::move(decls), std::move(edges));
}

Swig make_swig(const Dag& g) {
    std::string fixed = g.treatment();
    std::transform(fixed.begin(), fixed.end(), fixed.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    while (g.has_vertex(fixed)) fixed += "_";

    std::vector<VertexDecl> decls;
    for (int i = 0; i < g.vertex_count(); ++i) {
        decls.push_back({g.name_of(i),
                         i == g.treatment_index()  ? VertexRole::Treatment
                         : i == g.outcome_index()  ? VertexRole::Outcome
                                                   : VertexRole::Covariate,
                         g.is_latent(i)});
    }
    decls.push_back({fixed, VertexRole::Covariate, false});

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : g.edges()) {
        if (e.first == g.treatment()) {
            edges.emplace_back(fixed, e.second);
        } else {
            edges.push_back(e);
        }
    }

    Swig swig{Dag(std::move(decls), std::move(edges)), g.treatment(), fixed, {}};
    const VertexSet counterfactual =
        descendants(g, VertexSet{g.treatment()}) - VertexSet{g.treatment()};
    for (const auto& v : counterfactual) {
        swig.relabeled[v] = v + "(" + fixed + ")";
    }
    return swig;
}

VertexSet nontrivial_common_ancestors(const Dag& g, const std::string& v1, const std::string& v2) {
    const int i1 = g.index_of(v1);
    const int i2 = g.index_of(v2);
    if (i1 == i2) throw std::invalid_argument("non-trivial common ancestors need distinct vertices");

    const auto an1 = close_over(g, {i1}, /*upward=*/true);
    const auto an2 = close_over(g, {i2}, /*upward=*/true);
    std::vector<int> common;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u != i1 && u != i2 && an1[static_cast<std::size_t>(u)] &&
            an2[static_cast<std::size_t>(u)]) {
            common.push_back(u);
        }
    }

    std::vector<std::string> out;
    std::vector<char> reach(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack;
    for (int u : common) {
        // Directed reachability from u over vertices outside the common
        // ancestor set (u itself excepted); reaching v1 or v2 directly
        // certifies a qualifying causal path.
        std::fill(reach.begin(), reach.end(), 0);
        stack.assign(1, u);
        reach[static_cast<std::size_t>(u)] = 1;
        bool hit = false;
        while (!stack.empty() && !hit) {
            const int v = stack.back();
            stack.pop_back();
            for (int c : g.children_of(v)) {
                if (reach[static_cast<std::size_t>(c)]) continue;
                const bool in_common =
                    an1[static_cast<std::size_t>(c)] && an2[static_cast<std::size_t>(c)];
                if (c == i1 || c == i2) {
                    // An endpoint inside the common set still counts as
                    // "through" it (e.g. v1 when v1 is an ancestor of v2).
                    if (!in_common) {
                        hit = true;
                        break;
                    }
                    continue;
                }
                if (in_common) continue;
                reach[static_cast<std::size_t>(c)] = 1;
                stack.push_back(c);
            }
        }
        if (hit) out.push_back(g.name_of(u));
    }
    return VertexSet(std::move(out));
}

bool is_causally_closed(const Dag& g, const VertexSet& h) {
    const auto names = h.names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (!nontrivial_common_ancestors(g, names[i], names[j]).is_subset_of(h)) {
                return false;
            }
        }
    }
    return true;
}

VertexSet causal_closure(const Dag& g, const VertexSet& h) {
    VertexSet closed = h;
    (void)g.indices_of(h);  // validate membership up front
    bool changed = true;
    while (changed) {
        changed = false;
        const auto names = closed.names();
        for (std::size_t i = 0; i < names.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < names.size() && !changed; ++j) {
                const VertexSet extra =
                    nontrivial_common_ancestors(g, names[i], names[j]) - closed;
                if (!extra.empty()) {
                    closed = closed | extra;
                    changed = true;
                }
            }
        }
    }
    return closed;
}

VertexSet relevant_pretreatment(const Dag& g, const VertexSet& s) {
    if (!s.is_subset_of(g.observed_covariates())) {
        throw std::invalid_argument("candidate set must consist of observed covariates: " +
                                    (s - g.observed_covariates()).to_string());
    }
    const VertexSet ay{g.treatment(), g.outcome()};
    const VertexSet result = causal_closure(g, s | ay) - ay;
    const VertexSet post = descendants(g, VertexSet{g.treatment()}) - VertexSet{g.treatment()};
    if (result.intersects(post)) {
        throw std::logic_error("relevant pre-treatment set contains a treatment descendant");
    }
    return result;
}

}  // namespace confsel
