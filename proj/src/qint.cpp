#include "klrlab/qint.hpp"

#include <sstream>
#include <stdexcept>

namespace klrlab {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const BigInt& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::vector<std::pair<int, BigInt>> LaurentPoly::pairs() const {
    return {terms_.begin(), terms_.end()};
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, long>>& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p) r.add_term(e, c);
    return r;
}

LaurentPoly quantum_integer(int n) {
    LaurentPoly r;
    int m = n < 0 ? -n : n;
    for (int e = m - 1; e >= 1 - m; e -= 2) r.add_term(e, 1);
    return n < 0 ? -r : r;
}

LaurentPoly bar_involution(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    quot = LaurentPoly();
    LaurentPoly rem = a;
    const int bmax = b.max_exp();
    const int bspan = bmax - b.min_exp();
    const BigInt& lead = b.leading_coeff();
    while (!rem.is_zero()) {
        if (rem.max_exp() - rem.min_exp() < bspan) return false;
        BigInt c;
        const BigInt& top = rem.leading_coeff();
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        int shift = rem.max_exp() - bmax;
        quot.add_term(shift, c);
        rem -= b.shifted(shift).scaled(c);
    }
    return true;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    if (!try_divide(a, b, q)) throw std::domain_error("inexact Laurent division");
    return q;
}

BigInt content(const LaurentPoly& p) {
    BigInt g = 0;
    for (const auto& [e, c] : p.terms()) g = ::gcd(g, c);
    return g;
}

namespace {

LaurentPoly normalize_unit(LaurentPoly p) {
    if (p.is_zero()) return p;
    p = p.shifted(-p.min_exp());
    if (p.leading_coeff() < 0) p = -p;
    return p;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    BigInt c = content(p);
    LaurentPoly r;
    for (const auto& [e, v] : p.terms()) {
        BigInt x;
        mpz_divexact(x.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        r.add_term(e, x);
    }
    return r;
}

// Pseudo-remainder of a by b as polynomials in q (both with min exponent 0).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const int db = b.max_exp();
    const BigInt& lb = b.leading_coeff();
    while (!a.is_zero() && a.max_exp() >= db) {
        BigInt la = a.leading_coeff();
        int shift = a.max_exp() - db;
        a = a.scaled(lb) - b.shifted(shift).scaled(la);
    }
    return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return normalize_unit(b.is_zero() ? b : primitive_part(b).scaled(content(b)));
    if (b.is_zero()) return normalize_unit(primitive_part(a).scaled(content(a)));
    BigInt cg = ::gcd(content(a), content(b));
    LaurentPoly x = normalize_unit(primitive_part(a));
    LaurentPoly y = normalize_unit(primitive_part(b));
    if (x.max_exp() < y.max_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = pseudo_rem(x, y);
        x = y;
        y = r.is_zero() ? r : normalize_unit(primitive_part(r));
    }
    return normalize_unit(x).scaled(cg);
}

}  // namespace klrlab
