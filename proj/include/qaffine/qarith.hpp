#pragma once
// Exact arithmetic in Q(q): Laurent polynomials, reduced rational functions,
// q-integers and a modular evaluation path.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaffine {

using Rational = mpq_class;
using Integer = mpz_class;

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Rational& c);

    static LaurentPoly monomial(int e, const Rational& c = 1);
    static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& terms);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int num_terms() const;
    Rational coeff(int e) const;
    const Rational& lead() const { return c_.back(); }
    const Rational& trail() const { return c_.front(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // multiply by q^k
    LaurentPoly shifted(int k) const;
    // q -> q^k (k != 0)
    LaurentPoly substitute(int k) const;

    // Sorted (exponent, numerator, denominator) triples.
    std::vector<std::array<Integer, 3>> triples() const;
    static LaurentPoly from_triples(const std::vector<std::array<Integer, 3>>& t);

    std::string str() const;

    // Polynomial helpers for QRat normalisation (low() must be >= 0).
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem);
    static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

private:
    void trim();
    int lo_ = 0;
    std::vector<Rational> c_;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in Q(q)") {}
};

class QRat {
public:
    QRat() = default;
    QRat(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    QRat(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    QRat(const LaurentPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
    QRat(const LaurentPoly& num, const LaurentPoly& den);

    static QRat q(int e = 1) { return QRat(LaurentPoly::monomial(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    bool is_one() const;

    QRat operator-() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat inverse() const;
    QRat pow(int e) const;
    // q -> q^{-1}
    QRat mirror() const;
    QRat substitute(int k) const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
};

// q-integer [m]_{q^r}, by closed summation.
QRat q_int(long m, int r = 1);
LaurentPoly q_int_poly(long m, int r = 1);
QRat q_factorial(long m, int r = 1);
// Gaussian binomial [r s]_{q^m}
QRat q_binom(long r, long s, int m = 1);
// (m)_alpha! : real kind with exponent d_alpha, imaginary kind is m!
enum class RootKind { Real, Imaginary };
QRat exp_factorial(RootKind kind, int d_alpha, long m);

// ---- modular evaluation ----

struct PoleAtPoint : std::domain_error {
    PoleAtPoint() : std::domain_error("denominator vanishes at evaluation point") {}
};

class ModScalar {
public:
    ModScalar() = default;
    ModScalar(std::uint64_t value, std::uint64_t p, std::uint64_t t);

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }
    std::uint64_t point() const { return t_; }
    bool is_zero() const { return v_ == 0; }

    ModScalar operator-() const;
    ModScalar& operator+=(const ModScalar& o);
    ModScalar& operator-=(const ModScalar& o);
    ModScalar& operator*=(const ModScalar& o);
    ModScalar& operator/=(const ModScalar& o);
    friend ModScalar operator+(ModScalar a, const ModScalar& b) { return a += b; }
    friend ModScalar operator-(ModScalar a, const ModScalar& b) { return a -= b; }
    friend ModScalar operator*(ModScalar a, const ModScalar& b) { return a *= b; }
    friend ModScalar operator/(ModScalar a, const ModScalar& b) { return a /= b; }
    friend bool operator==(const ModScalar& a, const ModScalar& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const ModScalar& a, const ModScalar& b) { return !(a == b); }
    ModScalar inverse() const;

    std::string str() const { return std::to_string(v_); }

private:
    std::uint64_t v_ = 0, p_ = 0, t_ = 0;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime(std::uint64_t n);

constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

ModScalar eval_mod(const LaurentPoly& x, std::uint64_t p, std::uint64_t t);
ModScalar eval_mod(const QRat& x, std::uint64_t p, std::uint64_t t);

}  // namespace qaffine
