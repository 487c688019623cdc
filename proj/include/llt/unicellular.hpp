#pragma once

#include "llt/llt_poly.hpp"
#include "llt/partition.hpp"
#include "llt/permutation.hpp"
#include "llt/shape_tuple.hpp"
#include "llt/symfunc.hpp"

#include <vector>

namespace llt {

// Invariants of a tuple of n single cells, read off the shifted contents.
struct UnicellularProfile {
    int n = 0;
    std::vector<int> contents;  // per component
    Permutation w;              // w(i+1) = rank of component i's shifted content
    std::vector<int> f;         // f[i-1] = cells strictly below (i-th smallest shifted content) - n
    Partition lambda;           // lambda_i = f(n - i + 1)
};

UnicellularProfile profile(const ShapeTuple& t);    // every component a single cell
UnicellularProfile profile(const TwoDiagTuple& t);  // every piece a single cell

// Partition read with the weak threshold (<=) instead of the strict one;
// defined for any two-diagonal tuple, dominoes included.
Partition profile_prime(const TwoDiagTuple& t);

// A tuple of n single cells whose profile partition is lam; uses exactly the
// contents {0,1} whenever lam fits in an m x (n-m) rectangle.
ShapeTuple tuple_from_partition(int n, const Partition& lam);

// Strictly upper triangular nonnegative matrix weighting position inversions.
class InversionMatrix {
public:
    explicit InversionMatrix(int n);

    // Ones everywhere except zeros on {(j, n+1-r) : r <= len(lam), j <= lam_r}.
    static InversionMatrix from_partition(int n, const Partition& lam);

    int n() const { return n_; }
    int at(int i, int j) const;        // 1-based, requires i < j
    void set(int i, int j, int v);

    // Zero entries force zeros on all enclosing pairs: m_ij = 0 with k < i,
    // j < l implies m_kl = 0.
    bool satisfies_star() const;

    // Sum of m_ij over position inversions (i, j) of w.
    int inv(const Permutation& w) const;

private:
    int n_;
    std::vector<int> m_;  // row-major n x n, upper part used
};

// Sum over S_n of q^{inv(w, M)} F_{descents of w^{-1}}; requires (*).
FundVector G_M(const InversionMatrix& M, int bound = kDefaultEnumBound);

// The single-cell LLT function of lam inside staircase(n), via the weighted
// permutation statistic (cached).
FundVector G_unicellular(int n, const Partition& lam, int bound = kDefaultEnumBound);

// L(n, lam) = omega of the Schur expansion of G_unicellular (cached).
SchurVector L_of(int n, const Partition& lam, int bound = kDefaultEnumBound);

// Inversion-coupling bijection on S_n: identity when (x,y) and (x+1,y) have
// equal inversion status, otherwise right multiplication by s_x. Requires
// x + 1 < y <= n.
Permutation f_xy(const Permutation& w, int x, int y);

}  // namespace llt
