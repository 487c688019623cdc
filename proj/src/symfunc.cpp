#include "llt/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace llt {

namespace detail {

std::string coeff_prefix(const LaurentPoly& c) {
    if (c == LaurentPoly(1)) return "";
    bool bare = c.terms().size() == 1 && c.terms().begin()->second > 0;
    return bare ? c.str() : "(" + c.str() + ")";
}

}  // namespace detail

SchurVector schur_of(const Partition& p) {
    SchurVector v;
    v.add_term(p, LaurentPoly(1));
    return v;
}

SchurVector schur_vector_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InvalidInput("expected a basis-vector object");
    SchurVector v;
    for (const auto& t : j.at("terms"))
        v.add_term(Partition::from_json(t.at("index")), LaurentPoly::from_json(t.at("coeff")));
    return v;
}

FundVector fund_vector_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.contains("n"))
        throw InvalidInput("expected a basis-vector object with n");
    int n = j.at("n").get<int>();
    if (n < 0 || n > 30) throw InvalidInput("fundamental vector degree out of range");
    FundVector v;
    for (const auto& t : j.at("terms")) {
        DescentSet d{n, 0};
        for (const auto& e : t.at("index")) {
            int i = e.get<int>();
            if (i < 1 || i >= n) throw InvalidInput("descent outside 1..n-1");
            d.mask |= 1u << (i - 1);
        }
        v.add_term(d, LaurentPoly::from_json(t.at("coeff")));
    }
    return v;
}

namespace {

void added_rows(const Partition& p, int row, int rem, std::vector<int>& cur, std::vector<Partition>& out) {
    if (row > p.length() + 1) {
        if (rem == 0) out.emplace_back(cur);
        return;
    }
    int lo = p.part(row);
    int hi = row == 1 ? p.part(1) + rem : std::min(p.part(row - 1), p.part(row) + rem);
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        added_rows(p, row + 1, rem - (v - lo), cur, out);
        cur.pop_back();
    }
}

void removed_rows(const Partition& p, int row, int rem, std::vector<int>& cur, std::vector<Partition>& out) {
    if (row > p.length()) {
        if (rem == 0) out.emplace_back(cur);
        return;
    }
    int lo = std::max(p.part(row + 1), p.part(row) - rem);
    for (int v = p.part(row); v >= lo; --v) {
        cur.push_back(v);
        removed_rows(p, row + 1, rem - (p.part(row) - v), cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> conjugate_all(std::vector<Partition> ps) {
    for (auto& p : ps) p = p.conjugate();
    return ps;
}

}  // namespace

std::vector<Partition> horizontal_strips_added(const Partition& p, int r) {
    if (r < 0) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    added_rows(p, 1, r, cur, out);
    return out;
}

std::vector<Partition> horizontal_strips_removed(const Partition& p, int r) {
    if (r < 0 || r > p.size()) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    removed_rows(p, 1, r, cur, out);
    return out;
}

std::vector<Partition> vertical_strips_added(const Partition& p, int r) {
    return conjugate_all(horizontal_strips_added(p.conjugate(), r));
}

std::vector<Partition> vertical_strips_removed(const Partition& p, int r) {
    return conjugate_all(horizontal_strips_removed(p.conjugate(), r));
}

BigInt kostka(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) return 0;
    if (shape.empty()) return 1;
    if (!shape.dominates(content)) return 0;

    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static std::map<Key, BigInt> memo;
    static std::mutex memo_mutex;

    Key key{shape.parts(), content.parts()};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::vector<int> rest_parts(content.parts().begin(), content.parts().end() - 1);
    Partition rest(std::move(rest_parts));
    BigInt total = 0;
    for (const Partition& inner : horizontal_strips_removed(shape, content.parts().back()))
        total += kostka(inner, rest);

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), total);
    return total;
}

MonomialVector schur_to_monomial(const SchurVector& v) {
    MonomialVector out;
    if (v.is_zero()) return out;
    auto mus = Partition::all_of(v.n());
    for (const auto& [lam, c] : v.terms())
        for (const Partition& mu : mus) {
            BigInt k = kostka(lam, mu);
            if (k != 0) out.add_term(mu, k * c);
        }
    return out;
}

SchurVector monomial_to_schur(const MonomialVector& v) {
    SchurVector out;
    if (v.is_zero()) return out;
    MonomialVector work = v;
    for (const Partition& lam : Partition::all_of(v.n())) {
        LaurentPoly c = work.coeff(lam);
        if (c.is_zero()) continue;
        out.add_term(lam, c);
        work -= c * schur_to_monomial(schur_of(lam));
    }
    if (!work.is_zero()) throw SolveError("monomial expansion is not in the span of Schur rows");
    return out;
}

MonomialVector fund_to_monomial(const FundVector& v) {
    MonomialVector out;
    if (v.is_zero()) return out;
    int n = v.n();
    if (n > 22) throw BoundExceeded("fundamental expansion limited to degree 22");
    if (n == 0) {
        out.add_term(Partition(), v.coeff(DescentSet{0, 0}));
        return out;
    }

    const std::uint32_t size = 1u << (n - 1);
    std::vector<LaurentPoly> b(size);
    for (const auto& [d, c] : v.terms()) b[d.mask] = c;
    for (int bit = 0; bit < n - 1; ++bit)
        for (std::uint32_t t = 0; t < size; ++t)
            if (t >> bit & 1) b[t] += b[t ^ (1u << bit)];

    std::map<Partition, LaurentPoly> rep;
    for (std::uint32_t t = 0; t < size; ++t) {
        std::vector<int> comp;
        int prev = 0;
        for (int i = 1; i < n; ++i)
            if (t >> (i - 1) & 1) {
                comp.push_back(i - prev);
                prev = i;
            }
        comp.push_back(n - prev);
        std::sort(comp.begin(), comp.end(), std::greater<>());
        Partition key(std::move(comp));
        auto it = rep.find(key);
        if (it == rep.end()) {
            rep.emplace(std::move(key), b[t]);
        } else if (it->second != b[t]) {
            throw NotSymmetric("fundamental expansion is not symmetric");
        }
    }
    for (const auto& [p, c] : rep) out.add_term(p, c);
    return out;
}

SchurVector fund_to_schur(const FundVector& v) {
    return monomial_to_schur(fund_to_monomial(v));
}

SchurVector omega(const SchurVector& v) {
    SchurVector out;
    for (const auto& [p, c] : v.terms()) out.add_term(p.conjugate(), c);
    return out;
}

LaurentPoly inner_product(const SchurVector& a, const SchurVector& b) {
    LaurentPoly total;
    for (const auto& [p, c] : a.terms()) total += c * b.coeff(p);
    return total;
}

namespace {

SchurVector strip_map(const SchurVector& v, int r, std::vector<Partition> (*strips)(const Partition&, int)) {
    if (r == 0) return v;
    SchurVector out;
    for (const auto& [p, c] : v.terms())
        for (const Partition& q : strips(p, r)) out.add_term(q, c);
    return out;
}

}  // namespace

SchurVector pieri_h_multiply(const SchurVector& v, int r) {
    if (r < 0) return {};
    return strip_map(v, r, horizontal_strips_added);
}

SchurVector pieri_e_multiply(const SchurVector& v, int r) {
    if (r < 0) return {};
    return strip_map(v, r, vertical_strips_added);
}

SchurVector h_perp(const SchurVector& v, int r) {
    if (r < 0) return {};
    return strip_map(v, r, horizontal_strips_removed);
}

SchurVector e_perp(const SchurVector& v, int r) {
    if (r < 0) return {};
    return strip_map(v, r, vertical_strips_removed);
}

namespace {

// v times the generator chain; a zero index is the empty generator, a negative
// one kills the term.
SchurVector generator_chain(SchurVector v, const std::vector<int>& idx, bool use_e) {
    for (int a : idx) {
        if (a < 0) return {};
        if (a == 0) continue;
        v = use_e ? pieri_e_multiply(v, a) : pieri_h_multiply(v, a);
    }
    return v;
}

// v * s_mu through the determinant expansion over generator products, using
// whichever of the row or column form has fewer rows.
SchurVector multiply_by_one_schur(const SchurVector& v, const Partition& mu) {
    if (mu.empty()) return v;
    bool use_e = mu.part(1) < mu.length();
    Partition rows = use_e ? mu.conjugate() : mu;
    const int l = rows.length();
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 1);
    SchurVector out;
    do {
        std::vector<int> idx(l);
        bool alive = true;
        for (int i = 1; i <= l && alive; ++i) {
            idx[i - 1] = rows.part(i) - i + sigma[i - 1];
            alive = idx[i - 1] >= 0;
        }
        if (!alive) continue;
        SchurVector term = generator_chain(v, idx, use_e);
        if (Permutation(sigma).inversion_count() % 2) {
            out -= term;
        } else {
            out += term;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace

SchurVector schur_multiply(const SchurVector& a, const SchurVector& b) {
    SchurVector out;
    auto cost = [](const Partition& p) { return std::min(p.length(), p.part(1)); };
    for (const auto& [al, ac] : a.terms())
        for (const auto& [bl, bc] : b.terms()) {
            bool expand_b = cost(bl) <= cost(al);
            const Partition& base = expand_b ? al : bl;
            const Partition& det = expand_b ? bl : al;
            out += (ac * bc) * multiply_by_one_schur(schur_of(base), det);
        }
    return out;
}

}  // namespace llt
