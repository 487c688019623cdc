#pragma once

#include <json.hpp>

#include <compare>
#include <string>
#include <vector>

namespace llt {

// Integer partition: weakly decreasing positive parts.
// Ordering: by total size ascending, ties by lexicographically *greater* parts
// first, so dominance-maximal partitions of a given size sort earliest.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }   // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // 1-based, zero past the end

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const;

    Partition conjugate() const;

    // Diagram containment: other fits inside this.
    bool contains(const Partition& inner) const;

    // Dominance order; both partitions must have equal size.
    bool dominates(const Partition& o) const;

    bool is_k_bounded(int k) const { return parts_.empty() || parts_[0] <= k; }

    // Multiset union of parts, re-sorted.
    Partition union_with(const Partition& o) const;

    // Count of parts equal to each value, for monomial-coefficient symmetry checks.
    std::vector<int> part_multiplicities() const;

    std::string str() const;  // "[3,2,1]", "[]"

    nlohmann::json to_json() const;
    static Partition from_json(const nlohmann::json& j);

    // (m-1, m-2, ..., 1); m <= 1 gives the empty partition.
    static Partition staircase(int m);

    static std::vector<Partition> all_of(int n);

    // All partitions (including empty) whose diagram fits inside outer.
    static std::vector<Partition> subdiagrams_of(const Partition& outer);

    static std::vector<Partition> subdiagrams_of_box(int rows, int cols);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

}  // namespace llt
