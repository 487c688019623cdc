#pragma once

#include "llt/shape_tuple.hpp"
#include "llt/symfunc.hpp"

#include <functional>
#include <map>
#include <vector>

namespace llt {

inline constexpr int kDefaultEnumBound = 10;

// Entry per flat cell index of a ShapeTuple, values 1..n each once.
using StandardFilling = std::vector<int>;

// Polynomial in x_1..x_N: exponent vector -> coefficient.
using XPoly = std::map<std::vector<int>, LaurentPoly>;

bool is_standard_filling(const ShapeTuple& t, const StandardFilling& T);

void for_each_standard_filling(const ShapeTuple& t, const std::function<void(const StandardFilling&)>& fn);

// Ordered cell pairs (x, y) with 0 < shifted_content(y) - shifted_content(x) < d.
std::vector<std::pair<int, int>> admissible_pairs(const ShapeTuple& t);

// Count of admissible pairs with T(x) > T(y); throws on a non-standard filling.
int inv_d(const ShapeTuple& t, const StandardFilling& T);

// Fundamental expansion: sum over standard fillings of q^{inv} F_{iDes(u)},
// where u reads the entries in increasing shifted-content order and iDes(u)
// is the descent set of the inverse word.
FundVector llt_fund(const ShapeTuple& t, int bound = kDefaultEnumBound);

// Schur expansion of llt_fund (cached; throws NotSymmetric if conversion fails).
SchurVector llt_schur(const ShapeTuple& t, int bound = kDefaultEnumBound);

// Semistandard specialization in nvars variables: sum of q^{inv} x^{weight}.
XPoly llt_specialized(const ShapeTuple& t, int nvars, int bound = kDefaultEnumBound);

// Specialization of a fundamental expansion to finitely many variables.
XPoly specialize_fund(const FundVector& f, int nvars);

// Evaluate a Schur expansion in nvars variables (via semistandard tableaux).
XPoly specialize_schur(const SchurVector& v, int nvars);

struct SplitResult {
    ShapeTuple horizontal_merge;  // pair replaced by a horizontal domino
    ShapeTuple vertical_merge;    // pair replaced by a vertical domino
    int eps = 0;                  // content of component i
};

// Components i, i+1 (0-based) must be single cells with contents eps, 1-eps.
// llt(t) = llt(horizontal_merge) + q^eps llt(vertical_merge).
SplitResult split_cells(const ShapeTuple& t, int i);

// The same tuple with components i, i+1 exchanged.
ShapeTuple swapped_components(const ShapeTuple& t, int i);

// Inversion-preserving bijection on standard fillings when components i, i+1
// are a horizontal and a vertical domino with contents {0,1}, in either
// order: returns the matching filling of swapped_components(t, i) with the
// same inv_d and identical entries outside the two dominoes.
StandardFilling swap_psi(const ShapeTuple& t, int i, const StandardFilling& T);

}  // namespace llt
