#pragma once

#include "llt/partition.hpp"
#include "llt/symfunc.hpp"

#include <vector>

namespace llt {

// Sum over r of (-1)^r h_{a+r} e_r-perp applied to f; rows of negative
// length vanish. Applied to 1 with a >= 1 this creates s_(a).
SchurVector creation_S(int a, const SchurVector& f);

// Sum over i, j of (-1)^i q^j h_{a+i+j} e_i-perp h_j-perp applied to f,
// truncated at i + j <= deg f; reduces to creation_S at q = 0.
SchurVector jing_B(int a, const SchurVector& f);

// B_{lam_1} o ... o B_{lam_l} applied to 1.
SchurVector hall_littlewood(const Partition& lam);

// Rectangle operators for the three 2-split piece shapes: B_(1) = B_1,
// B_(2) = B_2, and B_(1,1) = B_1 o B_1 - q B_2 o B_0.
SchurVector rect_B(const Partition& rect, const SchurVector& f);

// Cut a k-bounded partition into maximal prefixes of main-hook length k
// (the last piece may be smaller).
std::vector<Partition> k_split(const Partition& lam, int k);

// Rectangle operators for each piece applied right to left to 1.
SchurVector gen_HL(const std::vector<Partition>& pieces);

// The 2-Schur function of a 2-bounded partition: gen_HL over its 2-split
// (cached).
SchurVector kschur2(const Partition& lam);

// The 2-split polynomials of degree n with their Schur expansions; a basis
// of the 2-bounded span, unitriangular in the canonical partition order.
class SplitBasis {
public:
    explicit SplitBasis(int n);

    int n() const { return n_; }
    const std::vector<Partition>& index() const { return index_; }
    const std::vector<SchurVector>& expansions() const { return expansions_; }

    // Coordinates of f in the basis; throws SolveError if f is outside the
    // span.
    std::vector<LaurentPoly> coordinates(const SchurVector& f) const;

private:
    int n_ = 0;
    std::vector<Partition> index_;
    std::vector<SchurVector> expansions_;
};

const SplitBasis& split_basis(int n);  // cached per degree

// Keep only the basis coordinates whose index has first part i.
SchurVector project_T2(int i, const SchurVector& f, const SplitBasis& basis);

// The recursive definition of the 2-Schur function: peel the largest part m,
// recurse, apply B_m, then project onto first-part-m coordinates. Must agree
// with kschur2.
SchurVector kschur2_def53(const Partition& lam);

// Expansion of a symmetric function in the 2-Schur basis (throws SolveError
// outside the 2-bounded span) and its inverse.
TwoSchurVector two_schur_expand(const SchurVector& f);
SchurVector two_schur_to_schur(const TwoSchurVector& v);

// Rectangle recursion check: with lam = mu cup nu, all parts of mu > ell >=
// all parts of nu, does B_(ell^(3-ell)) kschur2(lam) equal
// q^(|mu| - len(mu)) kschur2((ell^(3-ell)) cup lam)?
bool krec_verify(int ell, const Partition& mu, const Partition& nu);

}  // namespace llt
