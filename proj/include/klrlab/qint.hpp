#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace klrlab {

using BigInt = mpz_class;

// Laurent polynomial in q with integer coefficients. Zero coefficients are
// never stored, so structural equality is ring equality.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(int exp, const BigInt& coeff = 1);
    static LaurentPoly q(int exp = 1) { return monomial(exp); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    BigInt coeff(int exp) const;
    BigInt eval_at_one() const;
    const BigInt& leading_coeff() const;  // coefficient of max_exp

    void add_term(int exp, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly shifted(int k) const;  // multiply by q^k
    LaurentPoly scaled(const BigInt& c) const;

    std::string to_string() const;
    std::vector<std::pair<int, BigInt>> pairs() const;
    static LaurentPoly from_pairs(const std::vector<std::pair<int, long>>& p);

private:
    Terms terms_;
};

LaurentPoly quantum_integer(int n);
LaurentPoly bar_involution(const LaurentPoly& p);

// a / b when the quotient is a Laurent polynomial; throws std::domain_error otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
// Tries a / b; returns false when b does not divide a.
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);
// Greatest common divisor up to units ±q^k, normalized to min exponent 0 and
// positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
BigInt content(const LaurentPoly& p);

}  // namespace klrlab
