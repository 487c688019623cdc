#pragma once

#include "llt/laurent.hpp"
#include "llt/partition.hpp"
#include "llt/permutation.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace llt {

namespace detail {

inline int index_degree(const Partition& p) { return p.size(); }
inline int index_degree(const DescentSet& d) { return d.n; }
inline std::string index_str(const Partition& p) { return p.str(); }
inline std::string index_str(const DescentSet& d) { return d.str(); }
inline nlohmann::json index_json(const Partition& p) { return p.to_json(); }
inline nlohmann::json index_json(const DescentSet& d) { return nlohmann::json(d.elements()); }

// "" for coefficient one, bare string for a single positive term, else parenthesized.
std::string coeff_prefix(const LaurentPoly& c);

}  // namespace detail

// Homogeneous degree-n expansion in a fixed basis. The degree is inferred from
// the first term added; mixing degrees throws. A zero vector matches any degree.
template <class Index, class Tag>
class BasisVector {
public:
    BasisVector() = default;

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Index, LaurentPoly>& terms() const { return terms_; }

    LaurentPoly coeff(const Index& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add_term(const Index& i, const LaurentPoly& c) {
        if (c.is_zero()) return;
        int d = detail::index_degree(i);
        if (n_ < 0) {
            n_ = d;
        } else if (n_ != d) {
            throw InvalidInput("degree mismatch in basis vector");
        }
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            terms_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasisVector& operator+=(const BasisVector& o) {
        for (const auto& [i, c] : o.terms_) add_term(i, c);
        return *this;
    }
    BasisVector& operator-=(const BasisVector& o) {
        for (const auto& [i, c] : o.terms_) add_term(i, -c);
        return *this;
    }
    BasisVector operator+(const BasisVector& o) const {
        BasisVector r = *this;
        r += o;
        return r;
    }
    BasisVector operator-(const BasisVector& o) const {
        BasisVector r = *this;
        r -= o;
        return r;
    }
    BasisVector operator-() const {
        BasisVector r;
        for (const auto& [i, c] : terms_) r.add_term(i, -c);
        return r;
    }

    bool operator==(const BasisVector& o) const { return terms_ == o.terms_; }

    BasisVector scaled(const LaurentPoly& f) const {
        BasisVector r;
        for (const auto& [i, c] : terms_) r.add_term(i, c * f);
        return r;
    }

    // Terms rendered least-dominant index first, " + " separated.
    std::string str(const std::string& symbol = Tag::symbol) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            out << detail::coeff_prefix(it->second) << symbol << detail::index_str(it->first);
            first = false;
        }
        return out.str();
    }

    nlohmann::json to_json(const std::string& basis = Tag::name) const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [i, c] : terms_)
            terms.push_back({{"index", detail::index_json(i)}, {"coeff", c.to_json()}});
        return {{"n", n_ < 0 ? 0 : n_}, {"basis", basis}, {"terms", terms}};
    }

private:
    int n_ = -1;
    std::map<Index, LaurentPoly> terms_;
};

template <class Index, class Tag>
BasisVector<Index, Tag> operator*(const LaurentPoly& f, const BasisVector<Index, Tag>& v) {
    return v.scaled(f);
}

struct SchurBasis {
    static constexpr const char* name = "schur";
    static constexpr const char* symbol = "s";
};
struct MonomialBasis {
    static constexpr const char* name = "monomial";
    static constexpr const char* symbol = "m";
};
struct FundBasis {
    static constexpr const char* name = "fund";
    static constexpr const char* symbol = "F";
};

struct TwoSchurBasis {
    static constexpr const char* name = "two-schur";
    static constexpr const char* symbol = "k";
};

using SchurVector = BasisVector<Partition, SchurBasis>;
using MonomialVector = BasisVector<Partition, MonomialBasis>;
using FundVector = BasisVector<DescentSet, FundBasis>;
using TwoSchurVector = BasisVector<Partition, TwoSchurBasis>;

SchurVector schur_of(const Partition& p);
SchurVector schur_vector_from_json(const nlohmann::json& j);
FundVector fund_vector_from_json(const nlohmann::json& j);

// Semistandard tableau count of the given shape and content.
BigInt kostka(const Partition& shape, const Partition& content);

// Shapes reachable by adding/removing a horizontal or vertical strip of size r.
std::vector<Partition> horizontal_strips_added(const Partition& p, int r);
std::vector<Partition> horizontal_strips_removed(const Partition& p, int r);
std::vector<Partition> vertical_strips_added(const Partition& p, int r);
std::vector<Partition> vertical_strips_removed(const Partition& p, int r);

MonomialVector schur_to_monomial(const SchurVector& v);
SchurVector monomial_to_schur(const MonomialVector& v);

// Quasisymmetric-to-symmetric: throws NotSymmetric when the input is not
// actually symmetric.
MonomialVector fund_to_monomial(const FundVector& v);
SchurVector fund_to_schur(const FundVector& v);

// Degree involution s_lambda -> s_{lambda'}.
SchurVector omega(const SchurVector& v);

// Hall pairing with Schur functions orthonormal.
LaurentPoly inner_product(const SchurVector& a, const SchurVector& b);

// Multiplication by the complete/elementary generator of degree r, and the
// adjoint skewing operators.
SchurVector pieri_h_multiply(const SchurVector& v, int r);
SchurVector pieri_e_multiply(const SchurVector& v, int r);
SchurVector h_perp(const SchurVector& v, int r);
SchurVector e_perp(const SchurVector& v, int r);

SchurVector schur_multiply(const SchurVector& a, const SchurVector& b);

}  // namespace llt
