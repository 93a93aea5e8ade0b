#include <random>

#include "doctest.h"
#include "qaffine/qarith.hpp"

using namespace qaffine;

namespace {

QRat q(int e = 1) { return QRat::q(e); }

// Independent oracle: (q^{rm} - q^{-rm}) / (q^r - q^{-r}) by long division.
LaurentPoly q_int_by_division(long m, int r) {
    LaurentPoly num = LaurentPoly::monomial(static_cast<int>(r * m)) - LaurentPoly::monomial(static_cast<int>(-r * m));
    LaurentPoly den = LaurentPoly::monomial(r) - LaurentPoly::monomial(-r);
    int s = std::min(num.is_zero() ? 0 : num.low(), den.low());
    LaurentPoly quo, rem;
    LaurentPoly::divmod(num.shifted(-s), den.shifted(-den.low()), quo, rem);
    REQUIRE(rem.is_zero());
    return quo.shifted(s - den.low());
}

QRat random_qrat(std::mt19937_64& rng, bool allow_den = true) {
    std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3), nterms(0, 3);
    auto rpoly = [&](bool nonzero) {
        LaurentPoly p;
        do {
            p = LaurentPoly();
            int t = nterms(rng) + (nonzero ? 1 : 0);
            for (int i = 0; i < t; ++i) p += LaurentPoly::monomial(expo(rng), Rational(coef(rng), 1 + (coef(rng) + 4) % 3));
        } while (nonzero && p.is_zero());
        return p;
    };
    LaurentPoly n = rpoly(false);
    if (!allow_den) return QRat(n);
    return QRat(n, rpoly(true));
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(2, 1) == q() + q(-1));
    CHECK(q_int(0, 5).is_zero());
    CHECK(q_int(-3, 2) == -(q(4) + 1 + q(-4)));
    CHECK_THROWS_AS(q_int(1, 0), std::invalid_argument);
    for (int r = -5; r <= 5; ++r) {
        if (r == 0) continue;
        for (int m = -20; m <= 20; ++m) {
            CHECK(q_int(m, r) * (q(r) - q(-r)) == q(r * m) - q(-r * m));
            CHECK(q_int_poly(m, r) == q_int_by_division(m, r));
        }
    }
}

TEST_CASE("q-factorials and binomials") {
    CHECK(q_factorial(0, 1) == QRat(1));
    CHECK(q_factorial(3, 1) == (q() + q(-1)) * (q(2) + 1 + q(-2)));
    CHECK(q_factorial(2, 2) == q(2) + q(-2));
    CHECK(q_binom(5, 0, 3) == QRat(1));
    CHECK(q_binom(2, 1, 1) == q() + q(-1));
    CHECK(q_binom(4, 2, 1) == q(4) + q(2) + 2 + q(-2) + q(-4));
    CHECK_THROWS_AS(q_binom(2, 3, 1), std::invalid_argument);
    for (int r = 0; r <= 10; ++r)
        for (int s = 0; s <= r; ++s)
            for (int m : {1, 2, 3}) CHECK(q_binom(r, s, m).is_laurent());
    // Pascal rule as an independent check
    for (int r = 1; r <= 8; ++r)
        for (int s = 1; s < r; ++s)
            CHECK(q_binom(r, s, 1) == q(s) * q_binom(r - 1, s, 1) + q(s - r) * q_binom(r - 1, s - 1, 1));
}

TEST_CASE("exp factorials") {
    CHECK(exp_factorial(RootKind::Imaginary, 1, 3) == QRat(6));
    CHECK(exp_factorial(RootKind::Real, 1, 0) == QRat(1));
    CHECK(exp_factorial(RootKind::Real, 1, 2) == q(2) + 1);
    CHECK(exp_factorial(RootKind::Real, 2, 2) == q(4) + 1);
    // (m)_alpha = (q^{2m}-1)/(q^2-1)
    for (int m = 1; m <= 6; ++m)
        CHECK(exp_factorial(RootKind::Real, 1, m) / exp_factorial(RootKind::Real, 1, m - 1) == (q(2 * m) - 1) / (q(2) - 1));
}

TEST_CASE("canonical form") {
    QRat a(LaurentPoly::monomial(3) - LaurentPoly::monomial(1), LaurentPoly::monomial(2) * Rational(2) - LaurentPoly(2));
    // (q^3 - q)/(2q^2 - 2) = q/2
    CHECK(a == QRat(LaurentPoly::monomial(1, Rational(1, 2))));
    QRat b = QRat(1) / (q() - q(-1));
    CHECK(b.den().low() == 0);
    CHECK(b.den().lead() > 0);
    CHECK(b * (q() - q(-1)) == QRat(1));
    CHECK(b.mirror() == -b);
    CHECK_THROWS_AS(QRat(1) / QRat(0), DivisionByZero);
}

TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        QRat x = random_qrat(rng), y = random_qrat(rng), z = random_qrat(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == QRat(0));
        if (!x.is_zero()) CHECK(x / x == QRat(1));
    }
}

TEST_CASE("modular evaluation") {
    const std::uint64_t p = kDefaultPrime;
    CHECK(eval_mod(q() + q(-1), p, 1).value() == 2);
    CHECK_THROWS_AS(eval_mod(QRat(1) / (q() - q(-1)), p, 1), PoleAtPoint);
    {
        // t^2 + 1 + t^{-2} at t = 2 mod 101, inverse found by search
        std::uint64_t inv4 = 0;
        for (std::uint64_t k = 1; k < 101; ++k)
            if (4 * k % 101 == 1) inv4 = k;
        CHECK(eval_mod(q_int(3, 1), 101, 2).value() == (4 + 1 + inv4) % 101);
    }
    CHECK(is_prime(p));
    CHECK(!is_prime(p - 2));
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        QRat x = random_qrat(rng), y = random_qrat(rng);
        std::uint64_t t = 2 + rng() % (p - 3);
        try {
            ModScalar ex = eval_mod(x, p, t), ey = eval_mod(y, p, t);
            CHECK(eval_mod(x * y, p, t) == ex * ey);
            CHECK(eval_mod(x + y, p, t) == ex + ey);
        } catch (const PoleAtPoint&) {
        }
    }
}

TEST_CASE("serialization triples") {
    LaurentPoly p = LaurentPoly::monomial(-2, Rational(3, 5)) + LaurentPoly::monomial(4, -7);
    auto t = p.triples();
    REQUIRE(t.size() == 2);
    CHECK(t[0][0] == -2);
    CHECK(t[0][1] == 3);
    CHECK(t[0][2] == 5);
    CHECK(LaurentPoly::from_triples(t) == p);
}
