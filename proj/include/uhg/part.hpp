#ifndef UHG_PART_HPP
#define UHG_PART_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace uhg {

/// A non-empty vertex set arising as one side of a 2-partition of an edge,
/// or a singleton. Stored as a sorted, duplicate-free id sequence; equality
/// is set equality and the total order is (cardinality, lexicographic).
class Part {
public:
    Part() = default;
    explicit Part(std::vector<int> ids);
    Part(std::initializer_list<int> ids) : Part(std::vector<int>(ids)) {}
    static Part single(int v) { return Part({v}); }

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    int min_id() const { return ids_.front(); }
    int max_id() const { return ids_.back(); }

    bool contains(int v) const;
    bool subset_of(const Part& other) const;
    bool proper_subset_of(const Part& other) const;
    bool disjoint_with(const Part& other) const;

    Part set_union(const Part& other) const;
    Part set_minus(const Part& other) const;

    bool operator==(const Part& other) const { return ids_ == other.ids_; }
    bool operator!=(const Part& other) const { return ids_ != other.ids_; }
    bool operator<(const Part& other) const;

    /// "{0,2,5}"
    std::string str() const;

private:
    std::vector<int> ids_;
};

}  // namespace uhg

#endif
