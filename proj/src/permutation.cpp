#include "llt/permutation.hpp"

#include "llt/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace llt {

std::vector<int> DescentSet::elements() const {
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string DescentSet::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : elements()) {
        if (!first) out << ',';
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[v - 1])
            throw InvalidInput("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= n(); ++i) inv[w_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::inversion_count() const {
    int count = 0;
    for (int i = 1; i < n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (inverts(i, j)) ++count;
    return count;
}

Permutation Permutation::swapped_positions(int x) const {
    if (x < 1 || x >= n()) throw InvalidInput("adjacent transposition index out of range");
    std::vector<int> w = w_;
    std::swap(w[x - 1], w[x]);
    return Permutation(std::move(w));
}

DescentSet Permutation::descents() const {
    DescentSet d{n(), 0};
    for (int i = 1; i < n(); ++i)
        if (w_[i - 1] > w_[i]) d.mask |= 1u << (i - 1);
    return d;
}

DescentSet Permutation::inverse_descents() const {
    return inverse().descents();
}

std::string Permutation::str() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) out << ',';
        out << w_[i];
    }
    out << ']';
    return out.str();
}

void Permutation::for_each(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw InvalidInput("permutation rank must be nonnegative");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> Permutation::all_of(int n) {
    std::vector<Permutation> out;
    for_each(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

}  // namespace llt
