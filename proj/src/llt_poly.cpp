#include "llt/llt_poly.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace llt {

bool is_standard_filling(const ShapeTuple& t, const StandardFilling& T) {
    const int n = t.n();
    if (static_cast<int>(T.size()) != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : T) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    auto pred = t.predecessors();
    for (int i = 0; i < n; ++i)
        for (int p : pred[i])
            if (T[p] >= T[i]) return false;
    return true;
}

void for_each_standard_filling(const ShapeTuple& t, const std::function<void(const StandardFilling&)>& fn) {
    const int n = t.n();
    auto pred = t.predecessors();
    std::vector<int> missing(n);
    for (int i = 0; i < n; ++i) missing[i] = static_cast<int>(pred[i].size());
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
        for (int p : pred[i]) succ[p].push_back(i);

    StandardFilling val(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            fn(val);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (val[c] != 0 || missing[c] != 0) continue;
            val[c] = v;
            for (int s : succ[c]) --missing[s];
            rec(v + 1);
            for (int s : succ[c]) ++missing[s];
            val[c] = 0;
        }
    };
    rec(1);
}

std::vector<std::pair<int, int>> admissible_pairs(const ShapeTuple& t) {
    std::vector<std::pair<int, int>> pairs;
    const int n = t.n(), d = t.d();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long diff = t.shifted_content(b) - t.shifted_content(a);
            if (0 < diff && diff < d) pairs.emplace_back(a, b);
        }
    return pairs;
}

int inv_d(const ShapeTuple& t, const StandardFilling& T) {
    if (!is_standard_filling(t, T)) throw InvalidInput("filling is not standard");
    int count = 0;
    for (const auto& [a, b] : admissible_pairs(t))
        if (T[a] > T[b]) ++count;
    return count;
}

FundVector llt_fund(const ShapeTuple& t, int bound) {
    const int n = t.n();
    if (n > bound) throw BoundExceeded("tuple size exceeds the enumeration bound");
    auto order = t.reading_order();
    auto pairs = admissible_pairs(t);

    FundVector out;
    if (n == 0) {
        out.add_term(DescentSet{0, 0}, LaurentPoly(1));
        return out;
    }
    std::vector<int> pos_of_value(n + 1);
    for_each_standard_filling(t, [&](const StandardFilling& T) {
        int inv = 0;
        for (const auto& [a, b] : pairs)
            if (T[a] > T[b]) ++inv;
        for (int k = 0; k < n; ++k) pos_of_value[T[order[k]]] = k;
        DescentSet des{n, 0};
        for (int i = 1; i < n; ++i)
            if (pos_of_value[i + 1] < pos_of_value[i]) des.mask |= 1u << (i - 1);
        out.add_term(des, LaurentPoly::q_power(inv));
    });
    return out;
}

SchurVector llt_schur(const ShapeTuple& t, int bound) {
    if (t.n() > bound) throw BoundExceeded("tuple size exceeds the enumeration bound");
    static std::map<std::string, SchurVector> cache;
    static std::mutex cache_mutex;
    std::string key = t.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SchurVector v = fund_to_schur(llt_fund(t, bound));
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), v);
    return v;
}

XPoly llt_specialized(const ShapeTuple& t, int nvars, int bound) {
    const int n = t.n();
    if (n > bound) throw BoundExceeded("tuple size exceeds the enumeration bound");
    if (nvars < 0) throw InvalidInput("variable count must be nonnegative");
    auto pairs = admissible_pairs(t);
    auto pred = t.predecessors();
    const auto& cells = t.cells();

    XPoly out;
    std::vector<int> val(n, 0), weight(nvars, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int inv = 0;
            for (const auto& [a, b] : pairs)
                if (val[a] > val[b]) ++inv;
            auto it = out.find(weight);
            if (it == out.end()) {
                out.emplace(weight, LaurentPoly::q_power(inv));
            } else {
                it->second += LaurentPoly::q_power(inv);
            }
            return;
        }
        int lo = 1;
        for (int p : pred[i]) {
            bool strict = cells[p].cell.row < cells[i].cell.row;
            lo = std::max(lo, val[p] + (strict ? 1 : 0));
        }
        for (int v = lo; v <= nvars; ++v) {
            val[i] = v;
            ++weight[v - 1];
            rec(i + 1);
            --weight[v - 1];
            val[i] = 0;
        }
    };
    rec(0);
    return out;
}

XPoly specialize_fund(const FundVector& f, int nvars) {
    XPoly out;
    if (f.is_zero()) return out;
    const int n = f.n();
    for (const auto& [des, c] : f.terms()) {
        std::vector<int> idx(n, 0), weight(nvars, 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                auto it = out.find(weight);
                if (it == out.end()) {
                    out.emplace(weight, c);
                } else {
                    it->second += c;
                }
                return;
            }
            int lo = j == 0 ? 1 : idx[j - 1] + (des.contains(j) ? 1 : 0);
            for (int v = lo; v <= nvars; ++v) {
                idx[j] = v;
                ++weight[v - 1];
                rec(j + 1);
                --weight[v - 1];
            }
        };
        rec(0);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

XPoly specialize_schur(const SchurVector& v, int nvars) {
    XPoly out;
    MonomialVector mono = schur_to_monomial(v);
    for (const auto& [lam, c] : mono.terms()) {
        if (lam.length() > nvars) continue;
        std::vector<int> e = lam.parts();
        e.resize(nvars, 0);
        std::sort(e.begin(), e.end());
        do {
            auto it = out.find(e);
            if (it == out.end()) {
                out.emplace(e, c);
            } else {
                it->second += c;
            }
        } while (std::next_permutation(e.begin(), e.end()));
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

bool is_single_cell(const SkewComponent& c) { return c.cells.size() == 1; }

SkewComponent horizontal_domino_01() { return {{{1, 1}, {1, 2}}, 0}; }
SkewComponent vertical_domino_01() { return {{{1, 1}, {2, 1}}, 1}; }

}  // namespace

SplitResult split_cells(const ShapeTuple& t, int i) {
    if (i < 0 || i + 1 >= t.d()) throw InvalidInput("component index out of range");
    const auto& a = t.components()[i];
    const auto& b = t.components()[i + 1];
    if (!is_single_cell(a) || !is_single_cell(b))
        throw InvalidInput("both components must be single cells");
    int ca = a.content(a.cells[0]);
    int cb = b.content(b.cells[0]);
    if (!((ca == 0 && cb == 1) || (ca == 1 && cb == 0)))
        throw InvalidInput("cell contents must be 0 and 1 in some order");

    auto merged = [&](const SkewComponent& domino) {
        std::vector<SkewComponent> comps;
        for (int k = 0; k < t.d(); ++k) {
            if (k == i) {
                comps.push_back(domino);
            } else if (k != i + 1) {
                comps.push_back(t.components()[k]);
            }
        }
        return ShapeTuple(std::move(comps));
    };
    return {merged(horizontal_domino_01()), merged(vertical_domino_01()), ca};
}

ShapeTuple swapped_components(const ShapeTuple& t, int i) {
    if (i < 0 || i + 1 >= t.d()) throw InvalidInput("component index out of range");
    std::vector<SkewComponent> comps = t.components();
    std::swap(comps[i], comps[i + 1]);
    return ShapeTuple(std::move(comps));
}

namespace {

bool is_horizontal_01(const SkewComponent& c) {
    return c.cells.size() == 2 && c.cells[0].row == c.cells[1].row &&
           c.cells[0].col + 1 == c.cells[1].col && c.content(c.cells[0]) == 0;
}

bool is_vertical_01(const SkewComponent& c) {
    return c.cells.size() == 2 && c.cells[0].col == c.cells[1].col &&
           c.cells[0].row + 1 == c.cells[1].row && c.content(c.cells[0]) == 1;
}

}  // namespace

StandardFilling swap_psi(const ShapeTuple& t, int i, const StandardFilling& T) {
    if (i < 0 || i + 1 >= t.d()) throw InvalidInput("component index out of range");
    if (!is_standard_filling(t, T)) throw InvalidInput("filling is not standard");
    const auto& a = t.components()[i];
    const auto& b = t.components()[i + 1];
    bool ah = is_horizontal_01(a), av = is_vertical_01(a);
    bool bh = is_horizontal_01(b), bv = is_vertical_01(b);
    if (!((ah && bv) || (av && bh)))
        throw InvalidInput("components must be a horizontal and a vertical domino with contents 0,1");

    ShapeTuple swapped = swapped_components(t, i);

    // Flat index range of the two components (two cells each).
    int start = 0;
    for (int k = 0; k < i; ++k) start += static_cast<int>(t.components()[k].cells.size());
    const int block[4] = {start, start + 1, start + 2, start + 3};

    auto block_stats = [&](const ShapeTuple& shape, const StandardFilling& fill) {
        int inv = 0;
        for (int x : block)
            for (int y : block) {
                long long diff = shape.shifted_content(y) - shape.shifted_content(x);
                if (0 < diff && diff < shape.d() && fill[x] > fill[y]) ++inv;
            }
        std::set<int> zeros;
        for (int x : block)
            if (shape.content(x) == 0) zeros.insert(fill[x]);
        return std::make_pair(inv, zeros);
    };

    auto source = block_stats(t, T);

    std::vector<int> values;
    for (int x : block) values.push_back(T[x]);
    std::sort(values.begin(), values.end());

    auto swapped_pred = swapped.predecessors();
    StandardFilling candidate = T;
    std::vector<StandardFilling> matches;
    do {
        for (int k = 0; k < 4; ++k) candidate[block[k]] = values[k];
        bool standard = true;
        for (int k = 0; k < 4 && standard; ++k)
            for (int p : swapped_pred[block[k]])
                if (candidate[p] >= candidate[block[k]]) standard = false;
        if (!standard) continue;
        if (block_stats(swapped, candidate) == source) matches.push_back(candidate);
    } while (std::next_permutation(values.begin(), values.end()));

    if (matches.size() != 1) throw SolveError("swap bijection match is not unique");
    return matches.front();
}

}  // namespace llt
