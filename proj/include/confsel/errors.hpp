#ifndef CONFSEL_ERRORS_HPP
#define CONFSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confsel {

/// Raised when a .cg graph file (or its SEM parameter lines) cannot be
/// parsed or validated. Carries the 1-based line number when known (0
/// means the error concerns the file as a whole).
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Raised when a query references a vertex that does not exist in the graph
/// (or a column missing from a dataset).
class UnknownVertexError : public std::invalid_argument {
public:
    explicit UnknownVertexError(const std::string& name)
        : std::invalid_argument("unknown vertex: " + name) {}
};

}  // namespace confsel

#endif
