#include "confsel/dsep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "confsel/errors.hpp"

namespace confsel {

Path make_path(const Dag& g, std::vector<std::string> vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("a path needs at least two vertices");
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        (void)g.index_of(v);
        if (!seen.insert(v).second) throw std::invalid_argument("repeated vertex on path: " + v);
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (!g.has_edge(vertices[i], vertices[i + 1]) && !g.has_edge(vertices[i + 1], vertices[i])) {
            throw std::invalid_argument("path vertices not adjacent: " + vertices[i] + ", " +
                                        vertices[i + 1]);
        }
    }
    return Path{std::move(vertices)};
}

bool is_collider(const Dag& g, const Path& path, std::size_t index) {
    if (index == 0 || index + 1 >= path.vertices.size()) {
        throw std::invalid_argument("collider status is undefined at a path endpoint");
    }
    const std::string& v = path.vertices[index];
    return g.has_edge(path.vertices[index - 1], v) && g.has_edge(path.vertices[index + 1], v);
}

bool path_d_connects(const Dag& g, const Path& path, const VertexSet& given) {
    if (given.contains(path.vertices.front()) || given.contains(path.vertices.back())) {
        throw std::invalid_argument("path endpoint may not be in the conditioning set");
    }
    const VertexSet an_given = given.empty() ? VertexSet{} : ancestors(g, given);
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
        const std::string& v = path.vertices[i];
        if (is_collider(g, path, i)) {
            if (!an_given.contains(v)) return false;
        } else {
            if (given.contains(v)) return false;
        }
    }
    return true;
}

ReachEngine::ReachEngine(const Dag& g)
    : graph_(g),
      an_given_(static_cast<std::size_t>(g.vertex_count())),
      visited_up_(static_cast<std::size_t>(g.vertex_count())),
      visited_down_(static_cast<std::size_t>(g.vertex_count())) {
    stack_.reserve(static_cast<std::size_t>(2 * g.vertex_count()));
}

void ReachEngine::run(const std::vector<int>& sources, const std::vector<char>& given_mark,
                      std::vector<char>& reachable_out) {
    const std::size_t n = static_cast<std::size_t>(graph_.vertex_count());
    reachable_out.assign(n, 0);
    std::fill(an_given_.begin(), an_given_.end(), 0);
    std::fill(visited_up_.begin(), visited_up_.end(), 0);
    std::fill(visited_down_.begin(), visited_down_.end(), 0);
    stack_.clear();

    // Ancestral closure of the conditioning set; a collider passes the trail
    // exactly when it lies in this closure.
    for (std::size_t v = 0; v < n; ++v) {
        if (given_mark[v]) {
            an_given_[v] = 1;
            stack_.push_back(static_cast<int>(v));
        }
    }
    while (!stack_.empty()) {
        const int v = stack_.back();
        stack_.pop_back();
        for (int p : graph_.parents_of(v)) {
            if (!an_given_[static_cast<std::size_t>(p)]) {
                an_given_[static_cast<std::size_t>(p)] = 1;
                stack_.push_back(p);
            }
        }
    }

    // Trail states are (vertex, direction of entry); entering "up" means the
    // previous vertex was a child, entering "down" means it was a parent.
    // Encoded as 2*v for up and 2*v+1 for down.
    stack_.clear();
    for (int x : sources) {
        if (!visited_up_[static_cast<std::size_t>(x)]) {
            visited_up_[static_cast<std::size_t>(x)] = 1;
            reachable_out[static_cast<std::size_t>(x)] = 1;
            stack_.push_back(2 * x);
        }
    }
    while (!stack_.empty()) {
        const int state = stack_.back();
        stack_.pop_back();
        const int v = state >> 1;
        const bool entered_up = (state & 1) == 0;
        const std::size_t vi = static_cast<std::size_t>(v);

        if (entered_up) {
            if (given_mark[vi]) continue;
            for (int p : graph_.parents_of(v)) {
                const std::size_t pi = static_cast<std::size_t>(p);
                if (!visited_up_[pi]) {
                    visited_up_[pi] = 1;
                    if (!given_mark[pi]) reachable_out[pi] = 1;
                    stack_.push_back(2 * p);
                }
            }
            for (int c : graph_.children_of(v)) {
                const std::size_t ci = static_cast<std::size_t>(c);
                if (!visited_down_[ci]) {
                    visited_down_[ci] = 1;
                    if (!given_mark[ci]) reachable_out[ci] = 1;
                    stack_.push_back(2 * c + 1);
                }
            }
        } else {
            if (!given_mark[vi]) {
                for (int c : graph_.children_of(v)) {
                    const std::size_t ci = static_cast<std::size_t>(c);
                    if (!visited_down_[ci]) {
                        visited_down_[ci] = 1;
                        if (!given_mark[ci]) reachable_out[ci] = 1;
                        stack_.push_back(2 * c + 1);
                    }
                }
            }
            if (an_given_[vi]) {
                for (int p : graph_.parents_of(v)) {
                    const std::size_t pi = static_cast<std::size_t>(p);
                    if (!visited_up_[pi]) {
                        visited_up_[pi] = 1;
                        if (!given_mark[pi]) reachable_out[pi] = 1;
                        stack_.push_back(2 * p);
                    }
                }
            }
        }
    }
}

bool d_separated_indices(const Dag& g, const std::vector<int>& xs, const std::vector<int>& ys,
                         const std::vector<int>& given) {
    if (xs.empty() || ys.empty()) return true;
    std::vector<char> given_mark(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : given) given_mark[static_cast<std::size_t>(v)] = 1;
    ReachEngine engine(g);
    std::vector<char> reachable;
    engine.run(xs, given_mark, reachable);
    for (int y : ys) {
        if (reachable[static_cast<std::size_t>(y)]) return false;
    }
    return true;
}

bool d_separated(const Dag& g, const VertexSet& xs, const VertexSet& ys, const VertexSet& given) {
    if (xs.intersects(ys) || xs.intersects(given) || ys.intersects(given)) {
        throw std::invalid_argument("d-separation arguments must be pairwise disjoint");
    }
    return d_separated_indices(g, g.indices_of(xs), g.indices_of(ys), g.indices_of(given));
}

bool ignorability_holds(const Dag& g, const VertexSet& c) {
    const VertexSet ay{g.treatment(), g.outcome()};
    if (c.intersects(ay)) {
        throw std::invalid_argument("conditioning set may not contain treatment or outcome");
    }
    const VertexSet post = descendants(g, VertexSet{g.treatment()});
    if (c.intersects(post)) {
        throw std::invalid_argument(
            "conditioning set contains a descendant of the treatment; "
            "post-treatment adjustment is not supported: " +
            (c & post).to_string());
    }
    const Dag deleted = mutilate_backdoor(g);
    return d_separated(deleted, VertexSet{g.treatment()}, VertexSet{g.outcome()}, c);
}

namespace {

// Depth-first search for an inducing path: every interior non-collider must
// lie in the exempt set and every interior collider must be an ancestor of
// an endpoint. The collider condition applies inside the exempt set too;
// dropping it breaks the equivalence with non-separability (witness: a
// v-structure in the exempt set whose collider is ancestral to neither
// endpoint can still be blocked by the empty set).
class InducingSearch {
public:
    InducingSearch(const Dag& g, int u, int v, const std::vector<char>& exempt)
        : graph_(g), target_(v), exempt_(exempt),
          on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {
        std::vector<int> seeds{u, v};
        std::vector<char> an(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int s : seeds) an[static_cast<std::size_t>(s)] = 1;
        while (!seeds.empty()) {
            const int w = seeds.back();
            seeds.pop_back();
            for (int p : graph_.parents_of(w)) {
                if (!an[static_cast<std::size_t>(p)]) {
                    an[static_cast<std::size_t>(p)] = 1;
                    seeds.push_back(p);
                }
            }
        }
        endpoint_ancestor_ = std::move(an);
        start_ = u;
    }

    bool found() {
        on_path_[static_cast<std::size_t>(start_)] = 1;
        const bool hit = extend(start_, /*entered_head=*/false, /*is_start=*/true);
        on_path_[static_cast<std::size_t>(start_)] = 0;
        return hit;
    }

private:
    bool extend(int cur, bool entered_head, bool is_start) {
        const std::size_t ci = static_cast<std::size_t>(cur);
        // Leaving towards a parent makes the exit edge point into cur: cur is
        // a collider when it was entered head-on (needs to be an endpoint
        // ancestor) and a non-collider otherwise (needs to be exempt).
        const bool parent_moves =
            is_start || (entered_head ? endpoint_ancestor_[ci] != 0 : exempt_[ci] != 0);
        // Leaving towards a child makes cur a non-collider.
        const bool child_moves = is_start || exempt_[ci] != 0;

        if (parent_moves) {
            for (int p : graph_.parents_of(cur)) {
                if (on_path_[static_cast<std::size_t>(p)]) continue;
                if (p == target_) return true;
                on_path_[static_cast<std::size_t>(p)] = 1;
                if (extend(p, /*entered_head=*/false, false)) return true;
                on_path_[static_cast<std::size_t>(p)] = 0;
            }
        }
        if (child_moves) {
            for (int c : graph_.children_of(cur)) {
                if (on_path_[static_cast<std::size_t>(c)]) continue;
                if (c == target_) return true;
                on_path_[static_cast<std::size_t>(c)] = 1;
                if (extend(c, /*entered_head=*/true, false)) return true;
                on_path_[static_cast<std::size_t>(c)] = 0;
            }
        }
        return false;
    }

    const Dag& graph_;
    int start_ = -1;
    int target_ = -1;
    const std::vector<char>& exempt_;
    std::vector<char> endpoint_ancestor_;
    std::vector<char> on_path_;
};

}  // namespace

bool inducing_path_exists(const Dag& g, const std::string& u, const std::string& v,
                          const VertexSet& l) {
    const int ui = g.index_of(u);
    const int vi = g.index_of(v);
    if (ui == vi) throw std::invalid_argument("inducing path endpoints must be distinct");
    if (l.contains(u) || l.contains(v)) {
        throw std::invalid_argument("inducing path endpoints may not be in the exempt set");
    }
    std::vector<char> exempt(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int idx : g.indices_of(l)) exempt[static_cast<std::size_t>(idx)] = 1;
    InducingSearch search(g, ui, vi, exempt);
    return search.found();
}

}  // namespace confsel
