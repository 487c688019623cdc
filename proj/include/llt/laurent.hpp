#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace llt {

using BigInt = boost::multiprecision::cpp_int;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// Invariant: no stored coefficient is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: implicit constant lift is intended
    LaurentPoly(const BigInt& c);

    static LaurentPoly q_power(int e, BigInt coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly& o) const = default;

    // Coefficient of q^e (zero if absent).
    BigInt coeff(int e) const;

    int min_degree() const;  // throws InvalidInput on zero polynomial
    int max_degree() const;  // throws InvalidInput on zero polynomial

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);

    void add_term(int e, const BigInt& c);

    // Multiply by q^k.
    LaurentPoly shifted(int k) const;

    // q -> q^{-1}.
    LaurentPoly substitute_q_inverse() const;

    // Evaluate at an integer value of q (negative exponents require value in {1,-1}).
    BigInt evaluate(const BigInt& q) const;

    // Exact quotient this / d; throws SolveError if division leaves a remainder.
    LaurentPoly divided_exact(const LaurentPoly& d) const;

    // All coefficients nonnegative.
    bool is_nonneg() const;

    // Rendering: descending exponents, compact ("2q^3+q", "q^-2", "1", "0").
    std::string str() const;

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

    const std::map<int, BigInt>& terms() const { return terms_; }

private:
    std::map<int, BigInt> terms_;
};

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);

}  // namespace llt
