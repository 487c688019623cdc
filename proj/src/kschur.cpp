#include "llt/kschur.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace llt {

namespace {

bool is_two_bounded(const Partition& lam) { return lam.part(1) <= 2; }

int hook_of_prefix(const std::vector<int>& parts, int from, int to) {
    // Main hook length of rows [from, to]: first part plus row count minus 1.
    return parts[from] + (to - from);
}

}  // namespace

SchurVector creation_S(int a, const SchurVector& f) {
    if (f.is_zero()) return {};
    SchurVector out;
    for (int r = 0; r <= f.n(); ++r) {
        SchurVector term = pieri_h_multiply(e_perp(f, r), a + r);
        out += r % 2 ? -term : term;
    }
    return out;
}

SchurVector jing_B(int a, const SchurVector& f) {
    if (f.is_zero()) return {};
    SchurVector out;
    const int deg = f.n();
    for (int j = 0; j <= deg; ++j) {
        SchurVector hj = h_perp(f, j);
        if (hj.is_zero()) continue;
        for (int i = 0; i + j <= deg; ++i) {
            SchurVector term = pieri_h_multiply(e_perp(hj, i), a + i + j);
            term = term.scaled(LaurentPoly::q_power(j));
            out += i % 2 ? -term : term;
        }
    }
    return out;
}

SchurVector hall_littlewood(const Partition& lam) {
    SchurVector f = schur_of(Partition());
    for (int i = lam.length(); i >= 1; --i) f = jing_B(lam.part(i), f);
    return f;
}

SchurVector rect_B(const Partition& rect, const SchurVector& f) {
    if (rect == Partition({1})) return jing_B(1, f);
    if (rect == Partition({2})) return jing_B(2, f);
    if (rect == Partition({1, 1}))
        return jing_B(1, jing_B(1, f)) - jing_B(2, jing_B(0, f)).scaled(LaurentPoly::q_power(1));
    throw InvalidInput("rect_B supports only the shapes (1), (2), (1,1)");
}

std::vector<Partition> k_split(const Partition& lam, int k) {
    if (k < 1) throw InvalidInput("k_split: k must be positive");
    if (lam.part(1) > k) throw InvalidInput("k_split: partition is not k-bounded");
    const std::vector<int>& parts = lam.parts();
    std::vector<Partition> pieces;
    size_t from = 0;
    while (from < parts.size()) {
        size_t to = from;
        while (to + 1 < parts.size() && hook_of_prefix(parts, static_cast<int>(from), static_cast<int>(to + 1)) <= k)
            ++to;
        pieces.emplace_back(std::vector<int>(parts.begin() + from, parts.begin() + to + 1));
        from = to + 1;
    }
    return pieces;
}

SchurVector gen_HL(const std::vector<Partition>& pieces) {
    SchurVector f = schur_of(Partition());
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) f = rect_B(*it, f);
    return f;
}

SchurVector kschur2(const Partition& lam) {
    if (!is_two_bounded(lam)) throw InvalidInput("kschur2: partition is not 2-bounded");
    static std::map<std::vector<int>, SchurVector> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(lam.parts());
        if (it != cache.end()) return it->second;
    }
    SchurVector out = gen_HL(k_split(lam, 2));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(lam.parts(), std::move(out)).first->second;
}

SplitBasis::SplitBasis(int n) : n_(n) {
    if (n < 0) throw InvalidInput("SplitBasis: negative degree");
    for (const Partition& lam : Partition::all_of(n))
        if (is_two_bounded(lam)) index_.push_back(lam);
    std::sort(index_.begin(), index_.end());
    for (const Partition& lam : index_) expansions_.push_back(kschur2(lam));
}

std::vector<LaurentPoly> SplitBasis::coordinates(const SchurVector& f) const {
    if (!f.is_zero() && f.n() != n_) throw InvalidInput("SplitBasis: degree mismatch");
    std::vector<LaurentPoly> coords(index_.size());
    SchurVector residual = f;
    while (!residual.is_zero()) {
        // The canonically last (dominance-minimal) Schur term can only come
        // from the basis element with that exact index: every other term of
        // every basis element sits strictly dominance-above its index, and
        // dominating partitions order earlier.
        const Partition lam = residual.terms().rbegin()->first;
        const LaurentPoly c = residual.terms().rbegin()->second;
        auto it = std::lower_bound(index_.begin(), index_.end(), lam);
        if (it == index_.end() || !(*it == lam))
            throw SolveError("function is outside the 2-bounded span");
        size_t pos = static_cast<size_t>(it - index_.begin());
        coords[pos] = c;
        residual -= expansions_[pos].scaled(c);
    }
    return coords;
}

const SplitBasis& split_basis(int n) {
    static std::map<int, SplitBasis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, SplitBasis(n)).first;
    return it->second;
}

SchurVector project_T2(int i, const SchurVector& f, const SplitBasis& basis) {
    std::vector<LaurentPoly> coords = basis.coordinates(f);
    SchurVector out;
    for (size_t p = 0; p < coords.size(); ++p) {
        if (coords[p].is_zero() || basis.index()[p].part(1) != i) continue;
        out += basis.expansions()[p].scaled(coords[p]);
    }
    return out;
}

SchurVector kschur2_def53(const Partition& lam) {
    if (!is_two_bounded(lam)) throw InvalidInput("kschur2_def53: partition is not 2-bounded");
    if (lam.length() <= 1) return schur_of(lam);
    const int m = lam.part(1);
    std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
    SchurVector inner = kschur2_def53(Partition(rest));
    return project_T2(m, jing_B(m, inner), split_basis(lam.size()));
}

TwoSchurVector two_schur_expand(const SchurVector& f) {
    TwoSchurVector out;
    SchurVector residual = f;
    while (!residual.is_zero()) {
        const Partition lam = residual.terms().rbegin()->first;
        const LaurentPoly c = residual.terms().rbegin()->second;
        if (!is_two_bounded(lam)) throw SolveError("function is outside the 2-bounded span");
        out.add_term(lam, c);
        residual -= kschur2(lam).scaled(c);
    }
    return out;
}

SchurVector two_schur_to_schur(const TwoSchurVector& v) {
    SchurVector out;
    for (const auto& [lam, c] : v.terms()) out += kschur2(lam).scaled(c);
    return out;
}

bool krec_verify(int ell, const Partition& mu, const Partition& nu) {
    if (ell != 1 && ell != 2) throw InvalidInput("krec_verify: ell must be 1 or 2");
    if (mu.length() > 0 && mu.part(mu.length()) <= ell)
        throw InvalidInput("krec_verify: all parts of mu must exceed ell");
    if (nu.part(1) > ell) throw InvalidInput("krec_verify: all parts of nu must be at most ell");
    const Partition lam = mu.union_with(nu);
    const Partition rect(std::vector<int>(3 - ell, ell));
    SchurVector lhs = rect_B(rect, kschur2(lam));
    SchurVector rhs = kschur2(rect.union_with(lam)).scaled(LaurentPoly::q_power(mu.size() - mu.length()));
    return lhs == rhs;
}

}  // namespace llt
