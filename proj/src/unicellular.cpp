#include "llt/unicellular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace llt {

namespace {

std::vector<long long> shifted_contents(const ShapeTuple& t) {
    std::vector<long long> ct;
    ct.reserve(t.n());
    for (int i = 0; i < t.n(); ++i) ct.push_back(t.shifted_content(i));
    return ct;
}

UnicellularProfile profile_of_contents(const std::vector<int>& contents) {
    const int n = static_cast<int>(contents.size());
    UnicellularProfile p;
    p.n = n;
    p.contents = contents;

    std::vector<long long> ct(n);
    for (int i = 0; i < n; ++i) ct[i] = static_cast<long long>(n) * contents[i] + i;
    std::vector<long long> sorted_ct = ct;
    std::sort(sorted_ct.begin(), sorted_ct.end());

    std::vector<int> one_line(n);
    for (int i = 0; i < n; ++i) {
        int rank = 0;
        for (int j = 0; j < n; ++j)
            if (ct[j] < ct[i]) ++rank;
        one_line[i] = rank + 1;
    }
    p.w = Permutation(one_line);

    p.f.resize(n);
    for (int i = 1; i <= n; ++i) {
        const long long threshold = sorted_ct[i - 1] - n;
        int cnt = 0;
        for (long long v : ct)
            if (v < threshold) ++cnt;
        p.f[i - 1] = cnt;
    }

    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        const int part = p.f[n - i];  // f(n - i + 1)
        if (part > 0) parts.push_back(part);
    }
    p.lambda = Partition(parts);
    return p;
}

}  // namespace

UnicellularProfile profile(const ShapeTuple& t) {
    std::vector<int> contents;
    contents.reserve(t.d());
    for (const auto& comp : t.components()) {
        if (comp.cells.size() != 1)
            throw InvalidInput("profile requires every component to be a single cell");
        contents.push_back(comp.content(comp.cells[0]));
    }
    return profile_of_contents(contents);
}

UnicellularProfile profile(const TwoDiagTuple& t) {
    for (auto piece : t.pieces())
        if (piece == TwoDiagTuple::Piece::H || piece == TwoDiagTuple::Piece::V)
            throw InvalidInput("profile requires every piece to be a single cell");
    return profile(t.shape());
}

Partition profile_prime(const TwoDiagTuple& t) {
    const ShapeTuple shape = t.shape();
    const int d = shape.d();
    const int n = shape.n();
    std::vector<long long> ct = shifted_contents(shape);
    std::vector<long long> sorted_ct = ct;
    std::sort(sorted_ct.begin(), sorted_ct.end());

    std::vector<int> fprime(n);
    for (int i = 1; i <= n; ++i) {
        const long long threshold = sorted_ct[i - 1] - d;
        int cnt = 0;
        for (long long v : ct)
            if (v <= threshold) ++cnt;
        fprime[i - 1] = cnt;
    }
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        const int part = fprime[n - i];
        if (part > 0) parts.push_back(part);
    }
    return Partition(parts);
}

ShapeTuple tuple_from_partition(int n, const Partition& lam) {
    if (n < 0) throw InvalidInput("tuple_from_partition: negative n");
    if (!Partition::staircase(n).contains(lam))
        throw InvalidInput("tuple_from_partition: partition does not fit inside the staircase");

    // Target profile values in increasing shifted-content order.
    std::vector<int> s(n + 1, 0);
    for (int i = 1; i <= n; ++i) s[i] = lam.part(n - i + 1);

    // Greedy diagonal assignment: the i-th cell stays on the current diagonal
    // whenever the cells on strictly lower diagonals are enough to reach s_i,
    // and otherwise opens the next one. a = how many cells of the previous
    // diagonal must precede it in component order.
    std::vector<int> level(n), below(n), count;
    int cur = -1;
    auto prefix = [&](int l) {
        if (l < 0) return 0;
        int total = 0;
        for (int j = 0; j <= l; ++j) total += count[j];
        return total;
    };
    for (int i = 1; i <= n; ++i) {
        if (cur < 0 || s[i] > prefix(cur - 1)) {
            ++cur;
            count.push_back(0);
        }
        level[i - 1] = cur;
        below[i - 1] = s[i] - prefix(cur - 2);
        if (below[i - 1] < 0 || (cur > 0 && below[i - 1] > count[cur - 1]))
            throw SolveError("tuple_from_partition: diagonal assignment failed");
        ++count[cur];
    }

    // Interleave diagonals into a component order: each cell goes to the
    // earliest slot after its same-diagonal predecessor that has exactly
    // `below` cells of the previous diagonal in front of it.
    std::vector<int> seq;
    for (int i = 0; i < n; ++i) {
        const int l = level[i];
        const int a = below[i];
        int prev_pos = -1;
        for (int p = 0; p < static_cast<int>(seq.size()); ++p)
            if (seq[p] == l) prev_pos = p;
        int chosen = -1, cnt = 0;
        for (int p = 0; p <= static_cast<int>(seq.size()); ++p) {
            if (cnt == a && p > prev_pos) {
                chosen = p;
                break;
            }
            if (p < static_cast<int>(seq.size()) && seq[p] == l - 1) ++cnt;
        }
        if (chosen < 0) throw SolveError("tuple_from_partition: interleaving failed");
        seq.insert(seq.begin() + chosen, l);
    }

    ShapeTuple result = ShapeTuple::single_cells(seq);
    if (!(profile(result).lambda == lam))
        throw SolveError("tuple_from_partition: profile roundtrip failed");
    return result;
}

InversionMatrix::InversionMatrix(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {
    if (n < 0) throw InvalidInput("InversionMatrix: negative size");
}

InversionMatrix InversionMatrix::from_partition(int n, const Partition& lam) {
    if (!Partition::staircase(n).contains(lam))
        throw InvalidInput("InversionMatrix: partition does not fit inside the staircase");
    InversionMatrix M(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) M.set(i, j, 1);
    for (int r = 1; r <= lam.length(); ++r)
        for (int j = 1; j <= lam.part(r); ++j) M.set(j, n + 1 - r, 0);
    return M;
}

int InversionMatrix::at(int i, int j) const {
    if (i < 1 || j <= i || j > n_) throw InvalidInput("InversionMatrix: index out of range");
    return m_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

void InversionMatrix::set(int i, int j, int v) {
    if (i < 1 || j <= i || j > n_) throw InvalidInput("InversionMatrix: index out of range");
    if (v < 0) throw InvalidInput("InversionMatrix: negative entry");
    m_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = v;
}

bool InversionMatrix::satisfies_star() const {
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            if (at(i, j) != 0) continue;
            for (int k = 1; k < i; ++k)
                for (int l = j + 1; l <= n_; ++l)
                    if (at(k, l) != 0) return false;
        }
    return true;
}

int InversionMatrix::inv(const Permutation& w) const {
    if (w.n() != n_) throw InvalidInput("InversionMatrix: permutation size mismatch");
    int total = 0;
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (w.inverts(i, j)) total += at(i, j);
    return total;
}

FundVector G_M(const InversionMatrix& M, int bound) {
    if (!M.satisfies_star()) throw InvalidInput("G_M: matrix violates the zero-closure condition");
    if (M.n() > bound) throw BoundExceeded("G_M: n exceeds the enumeration bound");
    FundVector out;
    Permutation::for_each(M.n(), [&](const Permutation& w) {
        out.add_term(w.inverse_descents(), LaurentPoly::q_power(M.inv(w)));
    });
    return out;
}

FundVector G_unicellular(int n, const Partition& lam, int bound) {
    static std::map<std::pair<int, std::vector<int>>, FundVector> cache;
    static std::mutex mtx;
    const std::pair<int, std::vector<int>> key{n, lam.parts()};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FundVector out = G_M(InversionMatrix::from_partition(n, lam), bound);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(out)).first->second;
}

SchurVector L_of(int n, const Partition& lam, int bound) {
    static std::map<std::pair<int, std::vector<int>>, SchurVector> cache;
    static std::mutex mtx;
    const std::pair<int, std::vector<int>> key{n, lam.parts()};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SchurVector out = omega(fund_to_schur(G_unicellular(n, lam, bound)));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(out)).first->second;
}

Permutation f_xy(const Permutation& w, int x, int y) {
    if (x < 1 || x + 1 >= y || y > w.n()) throw InvalidInput("f_xy: indices out of range");
    if (w.inverts(x, y) == w.inverts(x + 1, y)) return w;
    return w.swapped_positions(x);
}

}  // namespace llt
