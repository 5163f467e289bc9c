#ifndef CONFSEL_VERTEX_SET_HPP
#define CONFSEL_VERTEX_SET_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace confsel {

/// An immutable set of vertex names kept in canonical (lexicographic) order.
/// This is the currency of every selection operation; iteration order is the
/// canonical order, so serialized output is deterministic.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<std::string> names);
    VertexSet(std::initializer_list<std::string> names);

    /// Parses a comma-separated list; the empty string denotes the empty set.
    static VertexSet from_csv(const std::string& text);

    bool contains(const std::string& name) const;
    bool empty() const { return names_.empty(); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<std::string>::const_iterator begin() const { return names_.begin(); }
    std::vector<std::string>::const_iterator end() const { return names_.end(); }

    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet operator-(const VertexSet& other) const;

    VertexSet with(const std::string& name) const;
    VertexSet without(const std::string& name) const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    bool operator==(const VertexSet& other) const = default;

    /// Renders as "{a, b, c}" (or "{}") for messages and text output.
    std::string to_string() const;

private:
    std::vector<std::string> names_;
};

}  // namespace confsel

#endif
