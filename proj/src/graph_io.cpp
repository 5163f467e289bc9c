#include "confsel/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "confsel/errors.hpp"

namespace confsel {

bool ParsedGraph::has_sem_parameters() const { return !coef.empty() || !noise.empty(); }

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

double parse_float(const std::string& token, std::size_t line_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw GraphParseError("expected a number, got '" + token + "'", line_no);
    }
}

}  // namespace

ParsedGraph parse_cg(std::istream& in) {
    std::vector<VertexDecl> decls;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> edge_set;
    std::map<std::pair<std::string, std::string>, double> coef;
    std::map<std::string, double> noise;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const std::string& kind = tokens[0];
        if (kind == "node") {
            if (tokens.size() < 3 || tokens.size() > 4) {
                throw GraphParseError("expected 'node <id> role=<role> [latent]'", line_no);
            }
            VertexDecl decl;
            decl.name = tokens[1];
            const std::string& role = tokens[2];
            if (role == "role=treatment") {
                decl.role = VertexRole::Treatment;
            } else if (role == "role=outcome") {
                decl.role = VertexRole::Outcome;
            } else if (role == "role=covariate") {
                decl.role = VertexRole::Covariate;
            } else {
                throw GraphParseError("unknown role '" + role + "'", line_no);
            }
            if (tokens.size() == 4) {
                if (tokens[3] != "latent") {
                    throw GraphParseError("unexpected token '" + tokens[3] + "'", line_no);
                }
                if (decl.role != VertexRole::Covariate) {
                    throw GraphParseError("latent is only allowed on covariates", line_no);
                }
                decl.latent = true;
            }
            if (!declared.insert(decl.name).second) {
                throw GraphParseError("duplicate node '" + decl.name + "'", line_no);
            }
            decls.push_back(std::move(decl));
        } else if (kind == "edge") {
            if (tokens.size() != 3) throw GraphParseError("expected 'edge <src> <dst>'", line_no);
            if (!declared.count(tokens[1])) {
                throw GraphParseError("edge references undeclared node '" + tokens[1] + "'",
                                      line_no);
            }
            if (!declared.count(tokens[2])) {
                throw GraphParseError("edge references undeclared node '" + tokens[2] + "'",
                                      line_no);
            }
            if (tokens[1] == tokens[2]) throw GraphParseError("self-loop is not allowed", line_no);
            if (!edge_set.insert({tokens[1], tokens[2]}).second) {
                throw GraphParseError("duplicate edge " + tokens[1] + " -> " + tokens[2], line_no);
            }
            edges.emplace_back(tokens[1], tokens[2]);
        } else if (kind == "coef") {
            if (tokens.size() != 4) {
                throw GraphParseError("expected 'coef <src> <dst> <float>'", line_no);
            }
            if (!edge_set.count({tokens[1], tokens[2]})) {
                throw GraphParseError("coef for missing edge " + tokens[1] + " -> " + tokens[2],
                                      line_no);
            }
            if (!coef.emplace(std::make_pair(tokens[1], tokens[2]), parse_float(tokens[3], line_no))
                     .second) {
                throw GraphParseError("duplicate coef for edge " + tokens[1] + " -> " + tokens[2],
                                      line_no);
            }
        } else if (kind == "noise") {
            if (tokens.size() != 3) throw GraphParseError("expected 'noise <id> <float>'", line_no);
            if (!declared.count(tokens[1])) {
                throw GraphParseError("noise for undeclared node '" + tokens[1] + "'", line_no);
            }
            if (!noise.emplace(tokens[1], parse_float(tokens[2], line_no)).second) {
                throw GraphParseError("duplicate noise for node '" + tokens[1] + "'", line_no);
            }
        } else {
            throw GraphParseError("unknown directive '" + kind + "'", line_no);
        }
    }

    try {
        return ParsedGraph{Dag(std::move(decls), std::move(edges)), std::move(coef),
                           std::move(noise)};
    } catch (const std::invalid_argument& e) {
        throw GraphParseError(e.what());
    }
}

ParsedGraph parse_cg_string(const std::string& text) {
    std::istringstream stream(text);
    return parse_cg(stream);
}

ParsedGraph parse_cg_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw GraphParseError("cannot open graph file: " + path);
    return parse_cg(stream);
}

namespace {

void append_graph(std::ostringstream& out, const Dag& g) {
    for (const auto& name : g.vertices()) {
        out << "node " << name;
        switch (g.role(name)) {
            case VertexRole::Treatment:
                out << " role=treatment";
                break;
            case VertexRole::Outcome:
                out << " role=outcome";
                break;
            case VertexRole::Covariate:
                out << " role=covariate";
                break;
        }
        if (g.is_latent(name)) out << " latent";
        out << "\n";
    }
    for (const auto& [src, dst] : g.edges()) {
        out << "edge " << src << " " << dst << "\n";
    }
}

}  // namespace

std::string to_cg_string(const Dag& g) {
    std::ostringstream out;
    append_graph(out, g);
    return out.str();
}

std::string to_cg_string(const ParsedGraph& parsed) {
    std::ostringstream out;
    out.precision(17);
    append_graph(out, parsed.dag);
    for (const auto& [edge, value] : parsed.coef) {
        out << "coef " << edge.first << " " << edge.second << " " << value << "\n";
    }
    for (const auto& [vertex, value] : parsed.noise) {
        out << "noise " << vertex << " " << value << "\n";
    }
    return out.str();
}

}  // namespace confsel
