#include "confsel/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace confsel {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

VertexSet::VertexSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

VertexSet::VertexSet(std::initializer_list<std::string> names)
    : VertexSet(std::vector<std::string>(names)) {}

VertexSet VertexSet::from_csv(const std::string& text) {
    if (trim(text).empty()) return {};
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string token =
            trim(text.substr(start, comma == std::string::npos ? comma : comma - start));
        if (token.empty()) {
            throw std::invalid_argument("empty vertex name in set: '" + text + "'");
        }
        names.push_back(token);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return VertexSet(std::move(names));
}

bool VertexSet::contains(const std::string& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    std::vector<std::string> out;
    out.reserve(names_.size() + other.names_.size());
    std::set_union(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                   std::back_inserter(out));
    VertexSet result;
    result.names_ = std::move(out);
    return result;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    std::vector<std::string> out;
    std::set_intersection(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                          std::back_inserter(out));
    VertexSet result;
    result.names_ = std::move(out);
    return result;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
    std::vector<std::string> out;
    std::set_difference(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                        std::back_inserter(out));
    VertexSet result;
    result.names_ = std::move(out);
    return result;
}

VertexSet VertexSet::with(const std::string& name) const { return *this | VertexSet{name}; }

VertexSet VertexSet::without(const std::string& name) const { return *this - VertexSet{name}; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto it = names_.begin();
    auto jt = other.names_.begin();
    while (it != names_.end() && jt != other.names_.end()) {
        if (*it == *jt) return true;
        if (*it < *jt) {
            ++it;
        } else {
            ++jt;
        }
    }
    return false;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i > 0) out += ", ";
        out += names_[i];
    }
    out += "}";
    return out;
}

}  // namespace confsel
