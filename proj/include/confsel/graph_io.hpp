#ifndef CONFSEL_GRAPH_IO_HPP
#define CONFSEL_GRAPH_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "confsel/dag.hpp"

namespace confsel {

/// A graph file plus any structural-equation parameters it carried.
/// `coef` is keyed by (src, dst) edge; `noise` by vertex.
struct ParsedGraph {
    Dag dag;
    std::map<std::pair<std::string, std::string>, double> coef;
    std::map<std::string, double> noise;

    bool has_sem_parameters() const;
};

/// Parses the line-oriented ".cg" graph format:
///
///   # comment to end of line
///   node <id> role=<treatment|outcome|covariate> [latent]
///   edge <src> <dst>
///   coef <src> <dst> <float>
///   noise <id> <float>
///
/// Nodes must be declared before edges that use them. Exactly one treatment
/// and one outcome are required; `latent` is allowed only on covariates.
/// Errors are reported as GraphParseError with the offending line number.
ParsedGraph parse_cg(std::istream& in);
ParsedGraph parse_cg_string(const std::string& text);
ParsedGraph parse_cg_file(const std::string& path);

/// Serializes a graph (and optional SEM parameters) back to the .cg format.
/// Re-parsing the output yields a graph with identical query answers.
std::string to_cg_string(const Dag& g);
std::string to_cg_string(const ParsedGraph& parsed);

}  // namespace confsel

#endif
