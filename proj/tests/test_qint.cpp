#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrlab/qint.hpp"

#include <random>

using namespace klrlab;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-6, 6), coeff(-5, 5), count(0, 5);
    LaurentPoly p;
    for (int k = count(rng); k > 0; --k) p.add_term(exp(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(2) == LaurentPoly::q(1) + LaurentPoly::q(-1));
    CHECK(quantum_integer(-3) == -(LaurentPoly::q(2) + 1 + LaurentPoly::q(-2)));
    CHECK(quantum_integer(1) == LaurentPoly(1));

    const LaurentPoly denom = LaurentPoly::q(1) - LaurentPoly::q(-1);
    for (int n = -9; n <= 9; ++n) {
        // (q - q^-1)[n] = q^n - q^-n
        CHECK(denom * quantum_integer(n) == LaurentPoly::q(n) - LaurentPoly::q(-n));
        CHECK(quantum_integer(-n) == -quantum_integer(n));
        if (n >= 1) CHECK(quantum_integer(n).eval_at_one() == n);
        CHECK(bar_involution(quantum_integer(n)) == quantum_integer(n));
    }
}

TEST_CASE("bar involution") {
    CHECK(bar_involution(LaurentPoly::q(2) + 1) == LaurentPoly::q(-2) + 1);
    CHECK(bar_involution(LaurentPoly()).is_zero());
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(bar_involution(bar_involution(p)) == p);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    CHECK(LaurentPoly::q(1) + LaurentPoly::q(-1) == quantum_integer(2));
    CHECK(quantum_integer(2) * quantum_integer(2) == LaurentPoly::q(2) + 2 + LaurentPoly::q(-2));
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const LaurentPoly ab = a * b;
        for (const auto& [e, v] : ab.terms()) CHECK(v != 0);
    }
}

TEST_CASE("exact division and gcd") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), g = random_poly(rng);
        if (b.is_zero() || g.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
        LaurentPoly d = gcd(a * g, b * g);
        if (!a.is_zero()) {
            LaurentPoly q;
            CHECK(try_divide(d, gcd(g, g), q));
            CHECK(try_divide(a * g, d, q));
            CHECK(try_divide(b * g, d, q));
        }
    }
    LaurentPoly q;
    CHECK_FALSE(try_divide(LaurentPoly(1), LaurentPoly::q(1) + 1, q));
    CHECK_THROWS(divide_exact(LaurentPoly(3), LaurentPoly(2)));
    CHECK(gcd(LaurentPoly::q(2) - 1, LaurentPoly::q(1) - 1) == LaurentPoly::q(1) - 1);
}
