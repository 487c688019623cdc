#include "llt/laurent.hpp"

#include <sstream>

namespace llt {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::q_power(int e, BigInt coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[e] = std::move(coeff);
    return p;
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw InvalidInput("min_degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw InvalidInput("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

BigInt LaurentPoly::evaluate(const BigInt& q) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            total += c * pow(q, static_cast<unsigned>(e));
        } else if (q == 1) {
            total += c;
        } else if (q == -1) {
            total += (e % 2 != 0) ? -c : c;
        } else {
            throw InvalidInput("cannot evaluate negative q-exponent at |q| != 1");
        }
    }
    return total;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw SolveError("division by zero polynomial");
    if (is_zero()) return {};
    const int dmin = d.min_degree();
    const BigInt& dlead = d.terms_.begin()->second;
    const int qmax = max_degree() - d.max_degree();

    LaurentPoly rem = *this;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms_.begin();
        const int qe = e - dmin;
        if (qe > qmax || c % dlead != 0) throw SolveError("inexact polynomial division");
        BigInt qc = c / dlead;
        quot.add_term(qe, qc);
        rem -= d * q_power(qe, qc);
    }
    return quot;
}

bool LaurentPoly::is_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (c < 0) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        BigInt a = abs(c);
        if (a != 1 || e == 0) out << a.str();
        if (e != 0) {
            out << 'q';
            if (e != 1) out << '^' << e;
        }
        first = false;
    }
    return out.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) arr.push_back({e, c.str()});
    return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("coefficient json must be an array");
    LaurentPoly p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidInput("coefficient term must be [exp, value]");
        int e = pair[0].get<int>();
        BigInt c;
        if (pair[1].is_string()) {
            c = BigInt(pair[1].get<std::string>());
        } else if (pair[1].is_number_integer()) {
            c = BigInt(pair[1].get<long long>());
        } else {
            throw InvalidInput("coefficient value must be string or integer");
        }
        p.add_term(e, c);
    }
    return p;
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
    return r;
}

}  // namespace llt
