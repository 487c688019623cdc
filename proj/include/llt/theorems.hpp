#pragma once

#include "llt/kschur.hpp"
#include "llt/llt_poly.hpp"
#include "llt/shape_tuple.hpp"
#include "llt/symfunc.hpp"
#include "llt/unicellular.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace llt {

// ---------------------------------------------------------------------------
// Linear relation among three unicellular expansions that differ in one row.
// ---------------------------------------------------------------------------

// True when (lam, i) satisfies the row-gap hypothesis, the tail-equality
// condition, and all three modified partitions index valid length-n
// expansions.
bool linear_relation_applicable(int n, const Partition& lam, int i);

// Checks G_{mu0} - G_{mu1} = q (G_{mu1} - G_{mu2}) where mu^a raises row i of
// lam by a. Throws InvalidInput when the hypothesis does not hold.
bool verify_linear_relation(int n, const Partition& lam, int i);

// The two symmetric functions splitting the three expansions: first = g1,
// second = g2 with L(n,mu0) = g1 + g2, L(n,mu1) = g1 + q^{-1} g2,
// L(n,mu2) = g1 + q^{-2} g2. Computed by exact division.
std::pair<SchurVector, SchurVector> linear_relation_split(int n, const Partition& lam, int i);

// ---------------------------------------------------------------------------
// The subset-indexed decomposition of L(n, lam).
// ---------------------------------------------------------------------------

struct LinearDecomposition {
    int n = 0;
    int m = 0;
    std::map<std::vector<int>, SchurVector> f;  // subset of {1..m} -> coefficient function

    // Sum of f_I q^{-e_I . lam} over all subsets.
    SchurVector reconstruct(const Partition& lam) const;
};

// Closed form for the half-filled case m = floor(n/2): a power of q times a
// column-and-domino Schur-like function, exponent m l + |mu| for even n and
// (m+1) l + |mu| for odd n.
SchurVector closed_form_f(const std::vector<int>& I, int m, int n);

// Aggregation for m below floor(n/2): sum of the half-filled closed forms
// over subsets restricting to J.
SchurVector f_less(const std::vector<int>& J, int m, int n);

// Constructive decomposition: domino-tuple route at m = floor(n/2),
// aggregation route below. Requires 0 <= m <= floor(n/2).
LinearDecomposition solve_decomposition(int n, int m);

// Independent solver: interpolates the decomposition from the expansions at
// the staircase-minus-mask family of indices, inverting the Kronecker system
// coordinate by coordinate with exact division by (q-1)^m.
LinearDecomposition solve_decomposition_linear(int n, int m);

// ---------------------------------------------------------------------------
// Domino tuples.
// ---------------------------------------------------------------------------

// omega(llt of the domino tuple for a) equals q^M times the 2-Schur function
// of column type, M depending only on the number of vertical dominoes.
bool domino_identity(const std::vector<int>& a, bool odd);

// The predicted q-exponent for the identity above.
int domino_exponent(int l, int m, bool odd);

// ---------------------------------------------------------------------------
// Two-diagonal tuples: the full expansion.
// ---------------------------------------------------------------------------

struct TwoDiagExpansion {
    TwoDiagTuple tuple;     // after conjugation, if applied
    bool conjugated = false;
    Partition lambda;       // profile of the tuple
    std::vector<int> K;     // positions (from the top) locked by a domino
    std::vector<int> zeta;  // zeta[j] = forced indicator for K[j]
    int z = 0;              // vertical dominoes
    SchurVector predicted;  // sum of f_{I,m} q^{-e_I . lambda - z}
    SchurVector direct;     // q^{-z} omega(llt)
    bool matches = false;
};

TwoDiagExpansion two_diag_expansion(const TwoDiagTuple& t);

// ---------------------------------------------------------------------------
// Products of two column functions.
// ---------------------------------------------------------------------------

struct ProductComparison {
    SchurVector lhs;          // H_{1^m} H_{1^{n-m}}
    SchurVector rhs;          // corrected subset sum
    SchurVector rhs_literal;  // the printed variant of the exponent
    std::optional<int> shift; // s with lhs = q^s rhs, when one exists
};

ProductComparison product_one_schur(int n, int m);

// ---------------------------------------------------------------------------
// Positivity reporting.
// ---------------------------------------------------------------------------

struct PositivityResult {
    bool positive = true;
    std::string witness;  // first offending term when not positive
};

PositivityResult positivity_report(const SchurVector& f);
PositivityResult positivity_report(const TwoSchurVector& f);

// ---------------------------------------------------------------------------
// Verification driver.
// ---------------------------------------------------------------------------

struct VerifyOptions {
    int max_n = 7;
    int samples = 1000;
    unsigned int seed = 12345;
    int jobs = 0;  // 0 = hardware concurrency
};

struct VerifyFailure {
    std::string case_id;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string theorem;
    int cases = 0;
    std::vector<VerifyFailure> failures;
    long long elapsed_ms = 0;
    // Fixed remark about a convention the sweep had to settle; text output
    // only, the json schema stays at its four documented keys.
    std::string note;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// The accepted sweep names, in fixed order.
const std::vector<std::string>& verification_names();

// Runs the named sweep. Throws InvalidInput for an unknown name.
VerifyReport run_verification(const std::string& name, const VerifyOptions& opts = {});

}  // namespace llt
