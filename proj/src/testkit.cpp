#include "confsel/testkit.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "confsel/adjustment.hpp"
#include "confsel/dsep.hpp"
#include "confsel/graph_io.hpp"
#include "confsel/sem.hpp"

#include "json.hpp"

namespace confsel::testkit {

namespace {

std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1) {
        if (mask & 1u) out.push_back(i);
    }
    return out;
}

std::vector<char> mask_to_marks(int n, std::uint32_t mask) {
    std::vector<char> marks(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) marks[static_cast<std::size_t>(i)] = 1;
    }
    return marks;
}

std::vector<char> ancestor_marks(const Dag& g, const std::vector<char>& seed) {
    std::vector<char> marks(seed);
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (marks[static_cast<std::size_t>(v)]) stack.push_back(v);
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int p : g.parents_of(v)) {
            if (!marks[static_cast<std::size_t>(p)]) {
                marks[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }
    return marks;
}

bool is_parent(const Dag& g, int parent, int child) {
    const auto& ps = g.parents_of(child);
    return std::binary_search(ps.begin(), ps.end(), parent);
}

}  // namespace

std::vector<std::vector<int>> enumerate_simple_paths(const Dag& g, int from, int to) {
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& adj = adjacency[static_cast<std::size_t>(v)];
        adj.insert(adj.end(), g.parents_of(v).begin(), g.parents_of(v).end());
        adj.insert(adj.end(), g.children_of(v).begin(), g.children_of(v).end());
        std::sort(adj.begin(), adj.end());
    }

    std::vector<std::vector<int>> paths;
    std::vector<int> current{from};
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(from)] = 1;

    const std::function<void(int)> dfs = [&](int v) {
        for (int next : adjacency[static_cast<std::size_t>(v)]) {
            if (on_path[static_cast<std::size_t>(next)]) continue;
            current.push_back(next);
            if (next == to) {
                paths.push_back(current);
            } else {
                on_path[static_cast<std::size_t>(next)] = 1;
                dfs(next);
                on_path[static_cast<std::size_t>(next)] = 0;
            }
            current.pop_back();
        }
    };
    dfs(from);
    return paths;
}

bool path_d_connects_bruteforce(const Dag& g, const std::vector<int>& path,
                                const std::vector<char>& given_mark,
                                const std::vector<char>& an_given_mark, bool invert_collider) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const int v = path[i];
        bool collider = is_parent(g, path[i - 1], v) && is_parent(g, path[i + 1], v);
        if (invert_collider) collider = !collider;
        if (collider) {
            if (!an_given_mark[static_cast<std::size_t>(v)]) return false;
        } else {
            if (given_mark[static_cast<std::size_t>(v)]) return false;
        }
    }
    return true;
}

bool dsep_bruteforce(const Dag& g, const VertexSet& xs, const VertexSet& ys,
                     const VertexSet& given, std::size_t vertex_cap) {
    if (static_cast<std::size_t>(g.vertex_count()) > vertex_cap) {
        throw std::invalid_argument("graph exceeds the brute-force cap of " +
                                    std::to_string(vertex_cap) + " vertices");
    }
    if (xs.intersects(ys) || xs.intersects(given) || ys.intersects(given)) {
        throw std::invalid_argument("d-separation arguments must be pairwise disjoint");
    }
    std::vector<char> given_mark(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : g.indices_of(given)) given_mark[static_cast<std::size_t>(v)] = 1;
    const std::vector<char> an_given = ancestor_marks(g, given_mark);

    for (int x : g.indices_of(xs)) {
        for (int y : g.indices_of(ys)) {
            for (const auto& path : enumerate_simple_paths(g, x, y)) {
                if (path_d_connects_bruteforce(g, path, given_mark, an_given)) return false;
            }
        }
    }
    return true;
}

std::vector<VertexSet> enumerate_blanket_family(const CiOracle& oracle, BoundaryKind kind,
                                                const VertexSet& v, std::size_t cap) {
    if (v.size() > cap) {
        throw std::invalid_argument("variable set exceeds the enumeration cap of " +
                                    std::to_string(cap));
    }
    const auto& pool = v.names();
    std::vector<VertexSet> family;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<std::string> members;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (mask & (1u << i)) members.push_back(pool[i]);
        }
        VertexSet sub(std::move(members));
        const bool is_blanket = kind == BoundaryKind::Treatment
                                    ? is_treatment_blanket(oracle, v, sub)
                                    : is_outcome_blanket(oracle, v, sub);
        if (is_blanket) family.push_back(std::move(sub));
    }
    std::sort(family.begin(), family.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.names() < b.names();
    });
    return family;
}

VertexSet closure_bruteforce(const Dag& g, const VertexSet& h, std::size_t vertex_cap) {
    if (static_cast<std::size_t>(g.vertex_count()) > vertex_cap) {
        throw std::invalid_argument("graph exceeds the brute-force cap of " +
                                    std::to_string(vertex_cap) + " vertices");
    }
    const VertexSet rest = g.vertices() - h;
    const auto& pool = rest.names();
    VertexSet intersection = g.vertices();
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<std::string> extra;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (mask & (1u << i)) extra.push_back(pool[i]);
        }
        const VertexSet candidate = h | VertexSet(std::move(extra));
        if (is_causally_closed(g, candidate)) {
            intersection = found ? (intersection & candidate) : candidate;
            found = true;
        }
    }
    return intersection;  // the full vertex set is always closed
}

Dag random_dag(const RandomDagSpec& spec) {
    if (spec.vertex_count < 2) {
        throw std::invalid_argument("random DAG needs at least 2 vertices");
    }
    if (!spec.treatment_before_outcome) {
        throw std::invalid_argument(
            "a causal DAG requires the treatment to precede the outcome");
    }
    std::mt19937_64 engine(spec.seed);
    const auto uniform = [&]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    const int n = spec.vertex_count;
    int treatment_pos, outcome_pos;
    if (spec.covariates_precede_treatment) {
        treatment_pos = n - 2;
        outcome_pos = n - 1;
    } else {
        treatment_pos = static_cast<int>(engine() % static_cast<std::uint64_t>(n - 1));
        outcome_pos = treatment_pos + 1 +
                      static_cast<int>(engine() % static_cast<std::uint64_t>(n - 1 - treatment_pos));
    }

    std::vector<VertexDecl> decls(static_cast<std::size_t>(n));
    int cov = 0;
    for (int pos = 0; pos < n; ++pos) {
        auto& decl = decls[static_cast<std::size_t>(pos)];
        if (pos == treatment_pos) {
            decl = {"A", VertexRole::Treatment, false};
        } else if (pos == outcome_pos) {
            decl = {"Y", VertexRole::Outcome, false};
        } else {
            decl = {"Z" + std::to_string(++cov), VertexRole::Covariate, false};
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uniform() < spec.edge_prob) {
                edges.emplace_back(decls[static_cast<std::size_t>(i)].name,
                                   decls[static_cast<std::size_t>(j)].name);
            }
        }
    }
    for (int pos = 0; pos < n; ++pos) {
        auto& decl = decls[static_cast<std::size_t>(pos)];
        if (decl.role != VertexRole::Covariate) continue;
        const bool pretreatment_kept =
            spec.covariates_precede_treatment && pos < treatment_pos;
        if (!pretreatment_kept && uniform() < spec.latent_fraction) decl.latent = true;
        if (pretreatment_kept && spec.latent_fraction > 0.0) (void)uniform();
    }
    return Dag(std::move(decls), std::move(edges));
}

void for_each_labeled_dag(int n, const std::function<void(const Dag&)>& fn) {
    if (n < 2 || n > 5) {
        throw std::invalid_argument("labeled DAG sweep supports 2..5 vertices");
    }
    const int bits = n * (n - 1);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) slots.emplace_back(i, j);
        }
    }

    std::vector<std::uint32_t> children(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::fill(children.begin(), children.end(), 0u);
        for (int b = 0; b < bits; ++b) {
            if (mask & (std::uint64_t{1} << b)) {
                children[static_cast<std::size_t>(slots[static_cast<std::size_t>(b)].first)] |=
                    (1u << slots[static_cast<std::size_t>(b)].second);
            }
        }
        // Peel vertices with no remaining incoming edges; leftovers mean a
        // cycle. The peeling order doubles as a topological order.
        std::uint32_t remaining = (1u << n) - 1;
        std::vector<int> topo;
        bool progress = true;
        while (remaining && progress) {
            progress = false;
            for (int v = 0; v < n; ++v) {
                if (!(remaining & (1u << v))) continue;
                bool has_parent = false;
                for (int u = 0; u < n; ++u) {
                    if ((remaining & (1u << u)) && (children[static_cast<std::size_t>(u)] &
                                                    (1u << v))) {
                        has_parent = true;
                        break;
                    }
                }
                if (!has_parent) {
                    topo.push_back(v);
                    remaining &= ~(1u << v);
                    progress = true;
                }
            }
        }
        if (remaining) continue;

        std::vector<VertexDecl> decls(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            decls[static_cast<std::size_t>(v)] = {"v" + std::to_string(v), VertexRole::Covariate,
                                                  false};
        }
        decls[static_cast<std::size_t>(topo.front())].role = VertexRole::Treatment;
        decls[static_cast<std::size_t>(topo.back())].role = VertexRole::Outcome;
        std::vector<std::pair<std::string, std::string>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (children[static_cast<std::size_t>(u)] & (1u << v)) {
                    edges.emplace_back("v" + std::to_string(u), "v" + std::to_string(v));
                }
            }
        }
        fn(Dag(std::move(decls), std::move(edges)));
    }
}

void for_each_ordered_dag(int n, const std::function<void(const Dag&)>& fn) {
    if (n < 2 || n > 7) {
        throw std::invalid_argument("ordered DAG sweep supports 2..7 vertices");
    }
    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<VertexDecl> decls(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            decls[static_cast<std::size_t>(v)] = {"v" + std::to_string(v), VertexRole::Covariate,
                                                  false};
        }
        decls.front().role = VertexRole::Treatment;
        decls.back().role = VertexRole::Outcome;
        std::vector<std::pair<std::string, std::string>> edges;
        for (int b = 0; b < bits; ++b) {
            if (mask & (std::uint64_t{1} << b)) {
                edges.emplace_back("v" + std::to_string(slots[static_cast<std::size_t>(b)].first),
                                   "v" + std::to_string(slots[static_cast<std::size_t>(b)].second));
            }
        }
        fn(Dag(std::move(decls), std::move(edges)));
    }
}

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

namespace {

Dag m_bias_graph() {
    return Dag({{"A", VertexRole::Treatment},
                {"Y", VertexRole::Outcome},
                {"U1", VertexRole::Covariate, true},
                {"U2", VertexRole::Covariate, true},
                {"L", VertexRole::Covariate}},
               {{"U1", "A"}, {"U1", "L"}, {"U2", "L"}, {"U2", "Y"}, {"A", "Y"}});
}

Dag chain_confounder_graph() {
    return Dag({{"A", VertexRole::Treatment},
                {"Y", VertexRole::Outcome},
                {"X1", VertexRole::Covariate},
                {"X2", VertexRole::Covariate}},
               {{"X1", "A"}, {"X1", "X2"}, {"X2", "Y"}, {"A", "Y"}});
}

Dag closure_example_graph() {
    return Dag({{"A", VertexRole::Treatment},
                {"Y", VertexRole::Outcome},
                {"S1", VertexRole::Covariate},
                {"S2", VertexRole::Covariate},
                {"Z1", VertexRole::Covariate},
                {"Z2", VertexRole::Covariate},
                {"Z3", VertexRole::Covariate},
                {"Z4", VertexRole::Covariate}},
               {{"A", "Y"},
                {"S1", "A"},
                {"S1", "Y"},
                {"S2", "A"},
                {"S2", "Y"},
                {"Z1", "S1"},
                {"Z1", "S2"},
                {"Z2", "A"},
                {"Z3", "Z1"},
                {"Z3", "Z4"},
                {"Z4", "S1"}});
}

// Full pairwise d-separation answers for one small graph, built with the
// production reachability engine; lets the axiom sweeps run on lookups.
class DsepTable {
public:
    explicit DsepTable(const Dag& g) : n_(g.vertex_count()) {
        if (n_ > 16) throw std::invalid_argument("d-separation table supports at most 16 vertices");
        table_.assign(static_cast<std::size_t>(n_ * n_) << n_, 0);
        ReachEngine engine(g);
        std::vector<char> reachable;
        std::vector<int> source(1);
        for (int x = 0; x < n_; ++x) {
            source[0] = x;
            for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
                if (mask & (1u << x)) continue;
                engine.run(source, mask_to_marks(n_, mask), reachable);
                for (int y = 0; y < n_; ++y) {
                    if (y == x || (mask & (1u << y))) continue;
                    table_[index(x, y, mask)] =
                        reachable[static_cast<std::size_t>(y)] ? 0 : 1;
                }
            }
        }
    }

    bool pair_separated(int x, int y, std::uint32_t given) const {
        return table_[index(x, y, given)] != 0;
    }

    bool set_separated(std::uint32_t xs, std::uint32_t ys, std::uint32_t given) const {
        for (int x = 0; x < n_; ++x) {
            if (!(xs & (1u << x))) continue;
            for (int y = 0; y < n_; ++y) {
                if (!(ys & (1u << y))) continue;
                if (!pair_separated(x, y, given)) return false;
            }
        }
        return true;
    }

    int size() const { return n_; }

private:
    std::size_t index(int x, int y, std::uint32_t mask) const {
        return (static_cast<std::size_t>(x * n_ + y) << n_) | mask;
    }

    int n_;
    std::vector<char> table_;
};

class SuiteRecorder {
public:
    SuiteRecorder(std::string name, const PropertyOptions& options)
        : options_(options) {
        result_.name = std::move(name);
    }

    void count() { ++result_.cases; }

    void fail(const std::string& description, const Dag& g) {
        PropertyFailure failure{description, to_cg_string(g)};
        if (!options_.counterexample_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(options_.counterexample_dir);
            const auto path = fs::path(options_.counterexample_dir) /
                              (result_.name + "_" + std::to_string(result_.failures.size()) + ".cg");
            std::ofstream out(path);
            out << failure.graph_cg;
        }
        result_.failures.push_back(std::move(failure));
    }

    bool too_many_failures() const { return result_.failures.size() >= 5; }

    SuiteResult take() { return std::move(result_); }

private:
    const PropertyOptions& options_;
    SuiteResult result_;
};

std::vector<Dag> random_graph_batch(const PropertyOptions& options, int count, int min_vertices,
                                    int max_vertices, double latent_fraction,
                                    bool covariates_precede_treatment, std::uint64_t salt,
                                    bool sparse = false) {
    std::vector<Dag> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        RandomDagSpec spec;
        spec.seed = options.seed + salt * 1000003ull + static_cast<std::uint64_t>(i);
        std::mt19937_64 pick(spec.seed ^ 0x9e3779b97f4a7c15ull);
        spec.vertex_count =
            min_vertices + static_cast<int>(pick() % static_cast<std::uint64_t>(
                                                        max_vertices - min_vertices + 1));
        // Path enumeration over dense graphs is exponential, so sweeps that
        // rely on it ask for sparse ones.
        spec.edge_prob = sparse ? 0.15 + 0.075 * static_cast<double>(pick() % 3)
                                : 0.2 + 0.2 * static_cast<double>(pick() % 3);
        spec.latent_fraction = latent_fraction;
        spec.covariates_precede_treatment = covariates_precede_treatment;
        graphs.push_back(random_dag(spec));
    }
    return graphs;
}

// Dual-implementation agreement: reachability versus exhaustive path
// enumeration, across all conditioning sets of each graph.
void check_dual_on_graph(const Dag& g, bool invert_collider, SuiteRecorder& rec) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::vector<int>>> paths(
        static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            paths[static_cast<std::size_t>(x * n + y)] = enumerate_simple_paths(g, x, y);
        }
    }

    ReachEngine engine(g);
    std::vector<char> reachable;
    std::vector<int> source(1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto given_mark = mask_to_marks(n, mask);
        const auto an_given = ancestor_marks(g, given_mark);
        for (int x = 0; x < n; ++x) {
            if (mask & (1u << x)) continue;
            source[0] = x;
            engine.run(source, given_mark, reachable);
            for (int y = x + 1; y < n; ++y) {
                if (mask & (1u << y)) continue;
                bool connected_brute = false;
                for (const auto& path : paths[static_cast<std::size_t>(x * n + y)]) {
                    if (path_d_connects_bruteforce(g, path, given_mark, an_given,
                                                   invert_collider)) {
                        connected_brute = true;
                        break;
                    }
                }
                rec.count();
                const bool connected_fast = reachable[static_cast<std::size_t>(y)] != 0;
                if (connected_brute != connected_fast) {
                    rec.fail("d-separation mismatch: x=" + g.name_of(x) + " y=" + g.name_of(y) +
                                 " given mask=" + std::to_string(mask),
                             g);
                    if (rec.too_many_failures()) return;
                }
            }
        }
    }
}

SuiteResult suite_dual_equivalence(const PropertyOptions& options) {
    SuiteRecorder rec("dsep-dual-equivalence", options);
    for (int n = 2; n <= options.exhaustive_vertices; ++n) {
        for_each_labeled_dag(n, [&](const Dag& g) {
            if (!rec.too_many_failures()) {
                check_dual_on_graph(g, options.canary_invert_collider, rec);
            }
        });
    }
    // One size beyond the labeled sweep, exhaustive up to isomorphism.
    if (options.exhaustive_vertices >= 5) {
        for_each_ordered_dag(6, [&](const Dag& g) {
            if (!rec.too_many_failures()) {
                check_dual_on_graph(g, options.canary_invert_collider, rec);
            }
        });
    }
    for (const Dag& g : random_graph_batch(options, options.random_graphs, 6, 9, 0.0, false, 11,
                                           /*sparse=*/true)) {
        if (rec.too_many_failures()) break;
        check_dual_on_graph(g, options.canary_invert_collider, rec);
    }
    return rec.take();
}

// Axioms of the d-separation relation, checked on group assignments of the
// vertices; conditioning-set changes make weak union, contraction and
// intersection genuine checks, while symmetry is covered by comparing runs
// rooted at either endpoint.
void check_axioms_on_graph(const Dag& g, std::uint64_t seed, SuiteRecorder& rec) {
    const DsepTable table(g);
    const int n = table.size();

    for (int x = 0; x < n && !rec.too_many_failures(); ++x) {
        for (int y = x + 1; y < n; ++y) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (mask & ((1u << x) | (1u << y))) continue;
                rec.count();
                if (table.pair_separated(x, y, mask) != table.pair_separated(y, x, mask)) {
                    rec.fail("symmetry violated", g);
                    break;
                }
            }
        }
    }

    // Assign each vertex to X, Y, W, Z or none (base-5 counter).
    std::vector<int> group(static_cast<std::size_t>(n), 0);
    const auto next_assignment = [&]() {
        for (int i = 0; i < n; ++i) {
            if (++group[static_cast<std::size_t>(i)] < 5) return true;
            group[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    };
    do {
        std::uint32_t xs = 0, ys = 0, ws = 0, zs = 0;
        for (int i = 0; i < n; ++i) {
            switch (group[static_cast<std::size_t>(i)]) {
                case 1: xs |= 1u << i; break;
                case 2: ys |= 1u << i; break;
                case 3: ws |= 1u << i; break;
                case 4: zs |= 1u << i; break;
                default: break;
            }
        }
        if (!xs || !ys) continue;
        rec.count();

        if (ws) {
            // Decomposition and weak union share the premise.
            if (table.set_separated(xs, ys | ws, zs)) {
                if (!table.set_separated(xs, ys, zs) || !table.set_separated(xs, ws, zs)) {
                    rec.fail("decomposition violated", g);
                }
                if (!table.set_separated(xs, ys, ws | zs)) {
                    rec.fail("weak union violated", g);
                }
            }
            // Contraction.
            if (table.set_separated(xs, ys, zs) && table.set_separated(xs, ws, ys | zs) &&
                !table.set_separated(xs, ws | ys, zs)) {
                rec.fail("contraction violated", g);
            }
            // Intersection (holds unconditionally for d-separation).
            if (table.set_separated(xs, ys, ws | zs) && table.set_separated(xs, ws, ys | zs) &&
                !table.set_separated(xs, ws | ys, zs)) {
                rec.fail("intersection violated", g);
            }
            // Composition.
            if (table.set_separated(xs, ys, zs) && table.set_separated(xs, ws, zs) &&
                !table.set_separated(xs, ws | ys, zs)) {
                rec.fail("composition violated", g);
            }
        }
        if (rec.too_many_failures()) return;
    } while (next_assignment());

    // The production set-query must agree with the pairwise definition.
    std::mt19937_64 engine(seed);
    for (int i = 0; i < 20; ++i) {
        std::uint32_t xs = 0, ys = 0, zs = 0;
        for (int v = 0; v < n; ++v) {
            switch (engine() % 4) {
                case 0: xs |= 1u << v; break;
                case 1: ys |= 1u << v; break;
                case 2: zs |= 1u << v; break;
                default: break;
            }
        }
        if (!xs || !ys) continue;
        rec.count();
        const bool fast = d_separated_indices(g, mask_to_indices(xs), mask_to_indices(ys),
                                              mask_to_indices(zs));
        if (fast != table.set_separated(xs, ys, zs)) {
            rec.fail("set query deviates from pairwise definition", g);
            return;
        }
    }
}

SuiteResult suite_graphoid(const PropertyOptions& options) {
    SuiteRecorder rec("dsep-graphoid", options);
    check_axioms_on_graph(m_bias_graph(), options.seed, rec);
    check_axioms_on_graph(chain_confounder_graph(), options.seed, rec);
    check_axioms_on_graph(closure_example_graph(), options.seed, rec);
    for (int n = 2; n <= options.exhaustive_vertices; ++n) {
        for_each_labeled_dag(n, [&](const Dag& g) {
            if (!rec.too_many_failures()) check_axioms_on_graph(g, options.seed, rec);
        });
    }
    for (const Dag& g : random_graph_batch(options, options.random_graphs / 4, 7,
                                           options.random_vertices, 0.0, false, 13)) {
        if (rec.too_many_failures()) break;
        check_axioms_on_graph(g, options.seed, rec);
    }
    return rec.take();
}

// Strengthened weak transitivity: x ⊥ y | W and x ⊥ y | W ∪ Z imply some
// z in Z is separated from x or from y given W.
void check_transitivity_on_graph(const Dag& g, SuiteRecorder& rec) {
    const DsepTable table(g);
    const int n = table.size();
    std::vector<int> group(static_cast<std::size_t>(n), 0);
    const auto next_assignment = [&]() {
        for (int i = 0; i < n; ++i) {
            if (++group[static_cast<std::size_t>(i)] < 3) return true;
            group[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    };

    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            std::fill(group.begin(), group.end(), 0);
            do {
                std::uint32_t ws = 0, zs = 0;
                bool overlap = false;
                for (int i = 0; i < n; ++i) {
                    if (group[static_cast<std::size_t>(i)] == 0) continue;
                    if (i == x || i == y) {
                        overlap = true;
                        break;
                    }
                    if (group[static_cast<std::size_t>(i)] == 1) ws |= 1u << i;
                    if (group[static_cast<std::size_t>(i)] == 2) zs |= 1u << i;
                }
                if (overlap || !zs) continue;
                rec.count();
                if (!table.pair_separated(x, y, ws) || !table.pair_separated(x, y, ws | zs)) {
                    continue;
                }
                bool witness = false;
                for (int z = 0; z < n && !witness; ++z) {
                    if (!(zs & (1u << z))) continue;
                    if (table.pair_separated(z, x, ws) || table.pair_separated(z, y, ws)) {
                        witness = true;
                    }
                }
                if (!witness) {
                    rec.fail("strengthened weak transitivity violated at x=" + g.name_of(x) +
                                 " y=" + g.name_of(y),
                             g);
                    if (rec.too_many_failures()) return;
                }
            } while (next_assignment());
        }
    }
}

SuiteResult suite_transitivity(const PropertyOptions& options) {
    SuiteRecorder rec("dsep-weak-transitivity", options);
    for (int n = 2; n <= options.exhaustive_vertices; ++n) {
        for_each_labeled_dag(n, [&](const Dag& g) {
            if (!rec.too_many_failures()) check_transitivity_on_graph(g, rec);
        });
    }
    if (options.transitivity_vertices > options.exhaustive_vertices) {
        for_each_ordered_dag(options.transitivity_vertices, [&](const Dag& g) {
            if (!rec.too_many_failures()) check_transitivity_on_graph(g, rec);
        });
    }
    for (const Dag& g : random_graph_batch(options, options.random_graphs / 4, 7,
                                           options.random_vertices, 0.0, false, 17)) {
        if (rec.too_many_failures()) break;
        check_transitivity_on_graph(g, rec);
    }
    return rec.take();
}

// Inducing-path detection against its separating characterization: an
// inducing path relative to L exists iff no subset of the remaining
// vertices d-separates the endpoints.
void check_verma_on_graph(const Dag& g, SuiteRecorder& rec) {
    const DsepTable table(g);
    const int n = table.size();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const std::uint32_t uv = (1u << u) | (1u << v);
            for (std::uint32_t l = 0; l < (1u << n); ++l) {
                if (l & uv) continue;
                rec.count();
                const std::uint32_t pool = ((1u << n) - 1) & ~(l | uv);
                bool separable = false;
                for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
                    if (table.pair_separated(u, v, sub)) {
                        separable = true;
                        break;
                    }
                    if (sub == 0) break;
                }
                const bool inducing =
                    inducing_path_exists(g, g.name_of(u), g.name_of(v), g.set_of(mask_to_indices(l)));
                if (inducing == separable) {
                    rec.fail("inducing-path and separability disagree: u=" + g.name_of(u) +
                                 " v=" + g.name_of(v) + " exempt mask=" + std::to_string(l),
                             g);
                    if (rec.too_many_failures()) return;
                }
            }
        }
    }
}

SuiteResult suite_verma(const PropertyOptions& options) {
    SuiteRecorder rec("dsep-inducing-paths", options);
    check_verma_on_graph(m_bias_graph(), rec);
    check_verma_on_graph(mutilate_backdoor(m_bias_graph()), rec);
    check_verma_on_graph(chain_confounder_graph(), rec);
    for (int n = 2; n <= 4; ++n) {
        for_each_labeled_dag(n, [&](const Dag& g) {
            if (!rec.too_many_failures()) check_verma_on_graph(g, rec);
        });
    }
    for (const Dag& g :
         random_graph_batch(options, options.random_graphs / 4, 5, 7, 0.0, false, 19)) {
        if (rec.too_many_failures()) break;
        check_verma_on_graph(g, rec);
    }
    return rec.take();
}

SuiteResult suite_closure(const PropertyOptions& options) {
    SuiteRecorder rec("causal-closure", options);

    {
        const Dag g = closure_example_graph();
        rec.count();
        const VertexSet seed{"S1", "S2", "A", "Y"};
        const VertexSet expected{"Z1", "Z3", "S1", "S2", "A", "Y"};
        if (causal_closure(g, seed) != expected) rec.fail("worked closure example wrong", g);
        rec.count();
        if (closure_bruteforce(g, seed) != expected) {
            rec.fail("brute-force closure deviates from worked example", g);
        }
    }

    std::mt19937_64 engine(options.seed + 23);
    for (const Dag& g :
         random_graph_batch(options, options.random_graphs, 4, 8, 0.0, false, 23)) {
        if (rec.too_many_failures()) break;
        const auto& names = g.vertices().names();
        // Random seed set, always containing treatment and outcome.
        std::vector<std::string> members{g.treatment(), g.outcome()};
        for (const auto& name : names) {
            if (engine() % 2 == 0) members.push_back(name);
        }
        const VertexSet h(std::move(members));

        rec.count();
        const VertexSet closed = causal_closure(g, h);
        if (closed != closure_bruteforce(g, h)) {
            rec.fail("closure fixpoint deviates from intersection definition on " + h.to_string(),
                     g);
            continue;
        }
        if (!h.is_subset_of(closed)) rec.fail("closure not extensive", g);
        if (causal_closure(g, closed) != closed) rec.fail("closure not idempotent", g);
        if (!is_causally_closed(g, closed)) rec.fail("closure output not causally closed", g);
        const VertexSet larger = closed | VertexSet{names[engine() % names.size()]};
        if (!causal_closure(g, h).is_subset_of(causal_closure(g, larger))) {
            rec.fail("closure not monotone", g);
        }

        // Pre-treatment property of the derived relevant set.
        rec.count();
        const VertexSet s = pretreatment_covariates(g);
        const VertexSet relevant = relevant_pretreatment(g, s);
        const VertexSet post =
            descendants(g, VertexSet{g.treatment()}) - VertexSet{g.treatment()};
        if (relevant.intersects(post)) {
            rec.fail("relevant pre-treatment set intersects treatment descendants", g);
        }

        // A causally closed set without treatment descendants is a
        // sufficient adjustment set once treatment and outcome are removed.
        rec.count();
        const VertexSet ay{g.treatment(), g.outcome()};
        const VertexSet closed_ay = causal_closure(g, (h - post) | ay);
        const VertexSet candidate = closed_ay - ay;
        if (!candidate.intersects(post)) {
            if (!blocks_all_backdoor(g, candidate)) {
                rec.fail("causally closed pre-treatment set fails to block back-door paths", g);
            }
        }
    }

    // Ancestral-relation basics ride along on the same batch.
    for (const Dag& g : random_graph_batch(options, 20, 3, 8, 0.0, false, 29)) {
        rec.count();
        const auto& names = g.vertices().names();
        const VertexSet small{names[engine() % names.size()]};
        const VertexSet big = small | VertexSet{names[engine() % names.size()]};
        if (!ancestors(g, small).is_subset_of(ancestors(g, big))) {
            rec.fail("ancestors not monotone", g);
        }
        if (ancestors(g, ancestors(g, big)) != ancestors(g, big)) {
            rec.fail("ancestors not idempotent", g);
        }
        if (descendants(g, descendants(g, big)) != descendants(g, big)) {
            rec.fail("descendants not idempotent", g);
        }
        if ((nondescendants(g, small) | descendants(g, small)) != g.vertices()) {
            rec.fail("descendants and nondescendants do not partition the vertices", g);
        }
    }
    return rec.take();
}

SuiteResult suite_adjustment(const PropertyOptions& options) {
    SuiteRecorder rec("adjustment-criteria", options);

    {
        // Fixed witness: a superset of a sufficient set need not stay
        // sufficient (conditioning on the collider flanked by the two
        // latent causes opens a path).
        const Dag g = m_bias_graph();
        rec.count();
        if (!blocks_all_backdoor(g, {})) rec.fail("empty set should suffice here", g);
        if (blocks_all_backdoor(g, VertexSet{"L"})) {
            rec.fail("collider conditioning should open a back-door path", g);
        }
        const auto pre = criterion_pretreatment(g, VertexSet{"L"});
        const auto disj = criterion_disjunctive(g, VertexSet{"L"});
        if (pre.sufficient.value_or(true) || !disj.sufficient.value_or(false)) {
            rec.fail("expected the whole-set criterion to fail while the "
                     "ancestor-union criterion succeeds",
                     g);
        }
    }

    // Conjunctive criterion under fully observed pre-treatment covariates.
    // The same batch cross-validates the ignorability reading: separation in
    // the edge-out-deleted graph must match separation of treatment and
    // outcome in the split-treatment graph for pre-treatment sets.
    for (const Dag& g :
         random_graph_batch(options, options.random_graphs / 2, 3, 9, 0.0, true, 31)) {
        if (rec.too_many_failures()) break;
        rec.count();
        const VertexSet s = g.covariates();
        const auto report = criterion_conjunctive(g, s);
        if (!report.sufficient.value_or(false)) {
            rec.fail("common-cause selection insufficient with all covariates observed: " +
                         report.output_c.to_string(),
                     g);
        }

        const Swig swig = make_swig(g);
        for (const VertexSet& c : {VertexSet{}, report.output_c, s}) {
            if (ignorability_holds(g, c) !=
                d_separated(swig.graph, VertexSet{g.treatment()}, VertexSet{g.outcome()}, c)) {
                rec.fail("split-treatment separation deviates from the back-door reading on " +
                             c.to_string(),
                         g);
            }
        }
    }

    // Disjunctive criterion whenever some subset suffices; latent covariates
    // and post-treatment vertices allowed. The inducing-path shortcut for
    // the existence test is pinned to the subset enumeration on the way.
    int disjunctive_cases = 0;
    std::uint64_t salt = 41;
    while (disjunctive_cases < options.random_graphs / 2 && !rec.too_many_failures()) {
        const auto batch = random_graph_batch(options, 16, 4, 9, 0.35, false, salt++);
        for (const Dag& g : batch) {
            const VertexSet s = pretreatment_covariates(g);
            const bool exists = exists_sufficient_subset(g, s);
            rec.count();
            if (s.size() <= 10 &&
                exists != !enumerate_minimal_sufficient_sets(g, s).empty()) {
                rec.fail("existence shortcut deviates from subset enumeration on " +
                             s.to_string(),
                         g);
                continue;
            }
            if (!exists) continue;
            ++disjunctive_cases;
            rec.count();
            const auto report = criterion_disjunctive(g, s);
            if (!report.sufficient.value_or(false)) {
                rec.fail("ancestor-union selection insufficient although a sufficient subset "
                         "exists in " +
                             s.to_string(),
                         g);
            }
        }
        if (salt > 400) break;
    }

    // Minimal-set enumeration against an unpruned subset scan.
    for (const Dag& g :
         random_graph_batch(options, options.random_graphs / 4, 3, 7, 0.0, false, 43)) {
        if (rec.too_many_failures()) break;
        rec.count();
        const VertexSet s = pretreatment_covariates(g);
        const auto minimal = enumerate_minimal_sufficient_sets(g, s);
        std::vector<VertexSet> expected;
        const auto& pool = s.names();
        for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
            std::vector<std::string> members;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (mask & (1u << i)) members.push_back(pool[i]);
            }
            const VertexSet c(std::move(members));
            if (!blocks_all_backdoor(g, c)) continue;
            // Inclusion-minimality checked against every proper subset.
            bool minimal_c = true;
            if (mask != 0) {
                for (std::uint32_t sub = (mask - 1) & mask; minimal_c; sub = (sub - 1) & mask) {
                    std::vector<std::string> sub_members;
                    for (std::size_t i = 0; i < pool.size(); ++i) {
                        if (sub & (1u << i)) sub_members.push_back(pool[i]);
                    }
                    if (blocks_all_backdoor(g, VertexSet(std::move(sub_members)))) {
                        minimal_c = false;
                    }
                    if (sub == 0) break;
                }
            }
            if (minimal_c) expected.push_back(c);
        }
        std::sort(expected.begin(), expected.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.names() < b.names();
        });
        if (minimal != expected) {
            rec.fail("pruned minimal-set enumeration deviates from the exhaustive scan", g);
        }
    }
    return rec.take();
}

LinearSem random_sem(const Dag& g, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    const auto uniform = [&]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
    std::map<std::pair<std::string, std::string>, double> coef;
    for (const auto& edge : g.edges()) {
        const double magnitude = 0.4 + 1.1 * uniform();
        coef[edge] = (uniform() < 0.5 ? -1.0 : 1.0) * magnitude;
    }
    std::map<std::string, double> noise;
    for (const auto& name : g.vertices()) noise[name] = 0.5 + uniform();
    return LinearSem(g, std::move(coef), std::move(noise));
}

SuiteResult suite_blanket(const PropertyOptions& options) {
    SuiteRecorder rec("markov-blankets", options);

    const auto check_graph = [&](const Dag& g, const CiOracle& oracle) {
        const VertexSet s = pretreatment_covariates(g);
        if (s.size() > 10) return;

        for (const BoundaryKind kind : {BoundaryKind::Treatment, BoundaryKind::Outcome}) {
            rec.count();
            const VertexSet boundary = boundary_pointwise(oracle, kind, s).boundary;

            // Stepwise agreement across input orders: every permutation for
            // small sets, shuffles otherwise.
            std::vector<std::string> order = s.names();
            if (s.size() <= 4) {
                do {
                    if (boundary_stepwise(oracle, kind, order).boundary != boundary) {
                        rec.fail("stepwise boundary deviates from pointwise for order change", g);
                        break;
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            } else {
                std::mt19937_64 shuffler(options.seed + s.size());
                for (int t = 0; t < 8; ++t) {
                    if (boundary_stepwise(oracle, kind, order).boundary != boundary) {
                        rec.fail("stepwise boundary deviates from pointwise for order change", g);
                        break;
                    }
                    std::shuffle(order.begin(), order.end(), shuffler);
                }
            }

            if (s.size() <= 7) {
                const auto family = enumerate_blanket_family(oracle, kind, s);
                // The variable set itself is always a blanket.
                if (family.empty() || family.back() != s) {
                    rec.fail("family misses the full variable set", g);
                }
                // Boundary is the family minimum: the intersection and a member.
                VertexSet inter = s;
                bool member = false;
                for (const auto& blanket : family) {
                    inter = inter & blanket;
                    if (blanket == boundary) member = true;
                }
                if (inter != boundary || !member) {
                    rec.fail("boundary is not the family minimum", g);
                }
                // Closure under intersection and order-irrelevant reduction.
                for (std::size_t i = 0; i < family.size(); ++i) {
                    for (std::size_t j = i + 1; j < family.size(); ++j) {
                        const VertexSet meet = family[i] & family[j];
                        if (std::find(family.begin(), family.end(), meet) == family.end()) {
                            rec.fail("blanket family not closed under intersection", g);
                        }
                    }
                    if (boundary_pointwise(oracle, kind, family[i]).boundary != boundary) {
                        rec.fail("reduction through a blanket changes the boundary", g);
                    }
                }
            }
        }
    };

    {
        const Dag gb = chain_confounder_graph();
        const DsepOracle oracle(gb);
        rec.count();
        // Fixed regression: the boundary-intersection rule fails here even
        // though every other combination rule succeeds.
        const VertexSet s{"X1", "X2"};
        if (!combine(oracle, CombineRule::Intersect, s).empty() ||
            blocks_all_backdoor(gb, combine(oracle, CombineRule::Intersect, s))) {
            rec.fail("intersection rule unexpectedly sufficient", gb);
        }
        for (const auto rule : {CombineRule::Union, CombineRule::TreatmentThenOutcome,
                                CombineRule::OutcomeThenTreatment}) {
            if (!blocks_all_backdoor(gb, combine(oracle, rule, s))) {
                rec.fail("combination rule lost sufficiency", gb);
            }
        }
        check_graph(gb, oracle);
        check_graph(m_bias_graph(), DsepOracle(m_bias_graph()));
    }

    for (const Dag& g :
         random_graph_batch(options, options.random_graphs / 2, 3, 9, 0.0, true, 47)) {
        if (rec.too_many_failures()) break;
        const DsepOracle oracle(g);
        check_graph(g, oracle);

        const VertexSet s = g.covariates();
        if (s.size() > 8) continue;

        // Soundness: every blanket of a sufficient candidate set controls
        // for confounding, as do the boundary combinations; the alternating
        // reductions land on stable, minimal sets.
        rec.count();
        for (const BoundaryKind kind : {BoundaryKind::Treatment, BoundaryKind::Outcome}) {
            for (const auto& blanket : enumerate_blanket_family(oracle, kind, s)) {
                if (!blocks_all_backdoor(g, blanket)) {
                    rec.fail("blanket of a sufficient set fails to control confounding", g);
                    break;
                }
            }
        }
        for (const auto rule : {CombineRule::Union, CombineRule::TreatmentThenOutcome,
                                CombineRule::OutcomeThenTreatment}) {
            if (!blocks_all_backdoor(g, combine(oracle, rule, s))) {
                rec.fail("boundary combination fails to control confounding", g);
            }
        }
        const auto minimal = enumerate_minimal_sufficient_sets(g, s);
        for (const auto start : {ReduceStart::TreatmentFirst, ReduceStart::OutcomeFirst}) {
            const VertexSet reduced = reduce_alternating(oracle, start, s);
            if (!verify_stability(oracle, reduced)) {
                rec.fail("alternating reduction not stable", g);
            }
            if (std::find(minimal.begin(), minimal.end(), reduced) == minimal.end()) {
                rec.fail("alternating reduction missed the minimal-set family: " +
                             reduced.to_string(),
                         g);
            }
        }
    }

    // The same blanket structure under the exact-covariance oracle.
    for (const Dag& g : random_graph_batch(options, 12, 3, 6, 0.0, true, 53)) {
        if (rec.too_many_failures()) break;
        const GaussianOracle oracle(random_sem(g, options.seed + 59), 1e-9);
        check_graph(g, oracle);
    }
    return rec.take();
}

SuiteResult suite_gaussian(const PropertyOptions& options) {
    SuiteRecorder rec("gaussian-oracle-agreement", options);
    std::mt19937_64 engine(options.seed + 61);
    for (const Dag& g : random_graph_batch(options, 40, 3, 6, 0.0, false, 61)) {
        if (rec.too_many_failures()) break;

        // Rejection-sample coefficients away from unfaithful cancellations:
        // every d-connected pair must show a clearly nonzero partial
        // correlation.
        const double tol = 1e-9;
        bool faithful = false;
        int attempts = 0;
        while (!faithful && attempts < 50) {
            const LinearSem sem = random_sem(g, options.seed + 67 * ++attempts + engine() % 1000);
            const auto sigma = exact_covariance(sem);
            const int n = g.vertex_count();
            faithful = true;
            bool agree = true;
            for (int x = 0; x < n && faithful; ++x) {
                for (int y = x + 1; y < n && faithful; ++y) {
                    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                        if (mask & ((1u << x) | (1u << y))) continue;
                        const VertexSet given = g.set_of(mask_to_indices(mask));
                        const double r = partial_correlation(sigma, g.name_of(x), g.name_of(y), given);
                        const bool separated = d_separated_indices(g, {x}, {y}, mask_to_indices(mask));
                        if (separated) {
                            if (std::abs(r) >= tol) agree = false;
                        } else if (std::abs(r) < 10 * tol) {
                            faithful = false;  // too close to a cancellation; resample
                            break;
                        }
                    }
                }
            }
            if (faithful) {
                rec.count();
                if (!agree) {
                    rec.fail("exact-covariance independence deviates from d-separation", g);
                }
            }
        }
        if (!faithful) {
            rec.count();
            rec.fail("could not sample a faithful parameterization in 50 attempts", g);
        }
    }
    return rec.take();
}

SuiteResult suite_sem_sampling(const PropertyOptions& options) {
    SuiteRecorder rec("sem-sampling", options);
    const Dag gb = chain_confounder_graph();
    const LinearSem sem(gb,
                        {{{"X1", "A"}, 0.8}, {{"X1", "X2"}, 0.7}, {{"X2", "Y"}, 0.6}, {{"A", "Y"}, 1.5}},
                        {{"A", 1.0}, {"Y", 1.0}, {"X1", 1.0}, {"X2", 1.0}});
    const auto sigma = exact_covariance(sem);

    for (const std::size_t n : {std::size_t{1000}, std::size_t{100000}}) {
        rec.count();
        const Dataset data = sample(sem, n, options.seed);
        const auto sample_sigma = data.sample_covariance();
        const double tol = 8.0 / std::sqrt(static_cast<double>(n));
        for (const auto& a : gb.vertices()) {
            for (const auto& b : gb.vertices()) {
                if (std::abs(sample_sigma(a, b) - sigma(a, b)) > tol * std::max(1.0, sigma(a, a))) {
                    rec.fail("sample covariance off for (" + a + ", " + b + ") at n=" +
                                 std::to_string(n),
                             gb);
                }
            }
        }
    }

    {
        rec.count();
        const Dag ga = m_bias_graph();
        const LinearSem sem_a(ga,
                              {{{"U1", "A"}, 1.0},
                               {{"U1", "L"}, 1.0},
                               {{"U2", "L"}, 1.0},
                               {{"U2", "Y"}, 1.0},
                               {{"A", "Y"}, 1.5}},
                              {{"A", 1.0}, {"Y", 1.0}, {"L", 1.0}, {"U1", 1.0}, {"U2", 1.0}});
        const auto cf = sample_counterfactual(sem_a.with_binary_treatment(), 20000, options.seed);
        for (std::size_t r = 0; r < cf.n_rows(); ++r) {
            const double expected = cf.a_factual[r] > 0.5 ? cf.y1[r] : cf.y0[r];
            if (cf.y_factual[r] != expected) {
                rec.fail("counterfactual consistency violated on a row", ga);
                break;
            }
        }

        // Both minimal adjustment sets of the chain-confounder model recover
        // the same structural effect.
        rec.count();
        const Dataset data = sample(sem, 20000, options.seed + 71);
        const double with_x1 = ate_standardization(data, "A", "Y", VertexSet{"X1"});
        const double with_x2 = ate_standardization(data, "A", "Y", VertexSet{"X2"});
        if (std::abs(with_x1 - 1.5) > 0.05 || std::abs(with_x2 - 1.5) > 0.05) {
            rec.fail("effect estimates deviate across minimal adjustment sets", gb);
        }
    }
    return rec.take();
}

SuiteResult suite_canary(const PropertyOptions& options) {
    SuiteRecorder rec("harness-canary", options);
    rec.count();
    PropertyOptions poisoned = options;
    poisoned.counterexample_dir.clear();
    SuiteRecorder inner("canary-inner", poisoned);
    check_dual_on_graph(m_bias_graph(), /*invert_collider=*/true, inner);
    const SuiteResult inner_result = inner.take();
    if (inner_result.failures.empty()) {
        rec.fail("inverted collider test went undetected", m_bias_graph());
    } else if (inner_result.failures.front().graph_cg.empty()) {
        rec.fail("counterexample was not serialized", m_bias_graph());
    }
    return rec.take();
}

}  // namespace

std::vector<SuiteResult> property_suites(const PropertyOptions& options) {
    std::vector<SuiteResult> results;
    results.push_back(suite_dual_equivalence(options));
    results.push_back(suite_graphoid(options));
    results.push_back(suite_transitivity(options));
    results.push_back(suite_verma(options));
    results.push_back(suite_closure(options));
    results.push_back(suite_adjustment(options));
    results.push_back(suite_blanket(options));
    results.push_back(suite_gaussian(options));
    results.push_back(suite_sem_sampling(options));
    results.push_back(suite_canary(options));
    return results;
}

std::string suites_to_json(const std::vector<SuiteResult>& results) {
    nlohmann::json report = nlohmann::json::array();
    for (const auto& suite : results) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& failure : suite.failures) {
            failures.push_back({{"description", failure.description}, {"graph", failure.graph_cg}});
        }
        report.push_back({{"suite", suite.name},
                          {"cases", suite.cases},
                          {"passed", suite.passed()},
                          {"failures", failures}});
    }
    return report.dump(2);
}

}  // namespace confsel::testkit
