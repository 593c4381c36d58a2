#include "uhg/part.hpp"

#include <algorithm>
#include <stdexcept>

namespace uhg {

Part::Part(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (ids_.empty()) throw std::invalid_argument("Part: empty vertex set");
    if (ids_.front() < 0) throw std::invalid_argument("Part: negative vertex id");
}

bool Part::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool Part::subset_of(const Part& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool Part::proper_subset_of(const Part& other) const {
    return size() < other.size() && subset_of(other);
}

bool Part::disjoint_with(const Part& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

Part Part::set_union(const Part& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return Part(std::move(out));
}

Part Part::set_minus(const Part& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return Part(std::move(out));
}

bool Part::operator<(const Part& other) const {
    if (ids_.size() != other.ids_.size()) return ids_.size() < other.ids_.size();
    return ids_ < other.ids_;
}

std::string Part::str() const {
    std::string s = "{";
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids_[i]);
    }
    s += '}';
    return s;
}

}  // namespace uhg
