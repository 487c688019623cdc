#include "llt/partition.hpp"

#include "llt/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace llt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw InvalidInput("partition parts must be weakly decreasing and positive");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw InvalidInput("partition part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(), parts_.begin(), parts_.end());
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0]);
    for (int col = 1; col <= parts_[0]; ++col)
        c[col - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; }));
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::dominates(const Partition& o) const {
    if (size_ != o.size_) throw InvalidInput("dominance compares partitions of equal size");
    int a = 0, b = 0;
    int rows = std::max(length(), o.length());
    for (int i = 1; i <= rows; ++i) {
        a += part(i);
        b += o.part(i);
        if (a < b) return false;
    }
    return true;
}

Partition Partition::union_with(const Partition& o) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<int> Partition::part_multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : parts_[0] + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

nlohmann::json Partition::to_json() const {
    return nlohmann::json(parts_);
}

Partition Partition::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("partition json must be an array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

Partition Partition::staircase(int m) {
    std::vector<int> parts;
    for (int p = m - 1; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

namespace {

void extend_partitions(std::vector<int>& cur, int remaining, int cap, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        cur.push_back(p);
        extend_partitions(cur, remaining - p, p, out);
        cur.pop_back();
    }
}

void extend_subdiagrams(std::vector<int>& cur, const Partition& outer, int row, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (row > outer.length()) return;
    int cap = std::min(outer.part(row), cur.empty() ? outer.part(1) : cur.back());
    for (int p = cap; p >= 1; --p) {
        cur.push_back(p);
        extend_subdiagrams(cur, outer, row + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> Partition::all_of(int n) {
    if (n < 0) throw InvalidInput("partition count requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    extend_partitions(cur, n, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> Partition::subdiagrams_of(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    extend_subdiagrams(cur, outer, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> Partition::subdiagrams_of_box(int rows, int cols) {
    std::vector<int> box(std::max(rows, 0), cols);
    return subdiagrams_of(Partition(std::move(box)));
}

}  // namespace llt
