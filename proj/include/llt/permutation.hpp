#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace llt {

// Subset of {1, ..., n-1}; bit i-1 of mask set iff i is in the set.
struct DescentSet {
    int n = 0;
    std::uint32_t mask = 0;

    bool operator==(const DescentSet&) const = default;
    bool operator<(const DescentSet& o) const {
        return n != o.n ? n < o.n : mask < o.mask;
    }

    bool contains(int i) const { return i >= 1 && i < n && (mask >> (i - 1)) & 1u; }
    std::vector<int> elements() const;
    std::string str() const;  // "{1,3}", "{}"
};

// Permutation of {1, ..., n} in one-line notation, 1-based values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

    Permutation inverse() const;

    // Positions i < j with w(i) > w(j).
    bool inverts(int i, int j) const { return w_[i - 1] > w_[j - 1]; }
    int inversion_count() const;

    // Right multiplication by the adjacent transposition s_x (swaps positions x, x+1).
    Permutation swapped_positions(int x) const;

    DescentSet descents() const;          // {i : w(i) > w(i+1)}
    DescentSet inverse_descents() const;  // descents of w^{-1}

    std::string str() const;  // "[2,1,3]"

    static void for_each(int n, const std::function<void(const Permutation&)>& fn);
    static std::vector<Permutation> all_of(int n);

private:
    std::vector<int> w_;
};

}  // namespace llt
