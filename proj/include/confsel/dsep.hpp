#ifndef CONFSEL_DSEP_HPP
#define CONFSEL_DSEP_HPP

#include <string>
#include <vector>

#include "confsel/dag.hpp"

namespace confsel {

/// A walk-free path: a sequence of distinct vertices in which every
/// consecutive pair is adjacent in the host graph (either direction).
struct Path {
    std::vector<std::string> vertices;

    std::size_t length() const { return vertices.size(); }
};

/// Validates the sequence against `g` (length >= 2, distinct vertices,
/// consecutive adjacency) and returns it as a Path.
Path make_path(const Dag& g, std::vector<std::string> vertices);

/// True iff both path neighbors of the vertex at `index` point into it.
/// `index` must be strictly interior.
bool is_collider(const Dag& g, const Path& path, std::size_t index);

/// True iff the path d-connects its endpoints given the conditioning set:
/// every non-collider is outside `given` and every collider is in `given` or
/// an ancestor of a member of `given`. Endpoints must not be in `given`.
bool path_d_connects(const Dag& g, const Path& path, const VertexSet& given);

/// Set-level d-separation: no d-connecting path between any x in xs and any
/// y in ys given `given`. The three sets must be pairwise disjoint.
/// Implemented by reachability over (vertex, travel-direction) states with a
/// precomputed ancestral closure of the conditioning set.
bool d_separated(const Dag& g, const VertexSet& xs, const VertexSet& ys, const VertexSet& given);

/// True iff the potential outcome is independent of the treatment given `c`,
/// read off the graph: d-separation of treatment and outcome in the
/// edge-out-deleted graph. `c` must not contain the treatment, the outcome,
/// or any descendant of the treatment.
bool ignorability_holds(const Dag& g, const VertexSet& c);

/// True iff some path between u and v has every non-endpoint non-collider
/// inside `l` and every non-endpoint collider an ancestor of u or v. Such a
/// path exists exactly when no subset of the vertices outside l ∪ {u, v}
/// d-separates u and v.
bool inducing_path_exists(const Dag& g, const std::string& u, const std::string& v,
                          const VertexSet& l);

/// Reusable reachability engine over one graph; buffers are recycled across
/// queries so sweeps over many conditioning sets stay allocation-free.
/// Not safe for concurrent use; create one per thread of control.
class ReachEngine {
public:
    explicit ReachEngine(const Dag& g);

    /// Marks every vertex d-connected to some source given the conditioning
    /// set. `given_mark` must have vertex_count entries; `reachable_out` is
    /// resized and overwritten.
    void run(const std::vector<int>& sources, const std::vector<char>& given_mark,
             std::vector<char>& reachable_out);

private:
    const Dag& graph_;
    std::vector<char> an_given_;
    std::vector<char> visited_up_;
    std::vector<char> visited_down_;
    std::vector<int> stack_;
};

/// Index-level d-separation without argument validation; used by the
/// string-level API and by the test harness sweeps.
bool d_separated_indices(const Dag& g, const std::vector<int>& xs, const std::vector<int>& ys,
                         const std::vector<int>& given);

}  // namespace confsel

#endif
