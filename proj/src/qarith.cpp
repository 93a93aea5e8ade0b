#include "qaffine/qarith.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

// ---------------- LaurentPoly ----------------

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) {
        c_.push_back(c);
        c_.back().canonicalize();
    }
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) {
        p.lo_ = e;
        p.c_.push_back(c);
        p.c_.back().canonicalize();
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(e, c);
    return p;
}

void LaurentPoly::trim() {
    size_t a = 0;
    while (a < c_.size() && sgn(c_[a]) == 0) ++a;
    if (a == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t b = c_.size();
    while (sgn(c_[b - 1]) == 0) --b;
    if (a > 0 || b < c_.size()) {
        std::vector<Rational> nc(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b));
        c_.swap(nc);
        lo_ += static_cast<int>(a);
    }
}

int LaurentPoly::num_terms() const {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) != 0; }));
}

Rational LaurentPoly::coeff(int e) const {
    if (c_.empty() || e < lo_ || e > high()) return 0;
    return c_[static_cast<size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int nlo = std::min(lo_, o.lo_), nhi = std::max(high(), o.high());
    if (nlo < lo_) c_.insert(c_.begin(), static_cast<size_t>(lo_ - nlo), Rational(0));
    lo_ = nlo;
    c_.resize(static_cast<size_t>(nhi - nlo + 1));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.lo_ - lo_) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        c_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    mpq_class t;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r.c_[i + j] += t;
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.c_.empty()) r.lo_ += k;
    return r;
}

LaurentPoly LaurentPoly::substitute(int k) const {
    if (k == 0) throw std::invalid_argument("substitute: exponent 0");
    LaurentPoly r;
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) r += monomial(k * (lo_ + static_cast<int>(i)), c_[i]);
    return r;
}

std::vector<std::array<Integer, 3>> LaurentPoly::triples() const {
    std::vector<std::array<Integer, 3>> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            out.push_back({Integer(lo_ + static_cast<long>(i)), c_[i].get_num(), c_[i].get_den()});
    return out;
}

LaurentPoly LaurentPoly::from_triples(const std::vector<std::array<Integer, 3>>& t) {
    LaurentPoly p;
    for (const auto& tr : t) {
        if (!tr[0].fits_sint_p()) throw std::invalid_argument("exponent out of range");
        if (sgn(tr[2]) == 0) throw std::invalid_argument("zero denominator");
        Rational c(tr[1], tr[2]);
        c.canonicalize();
        p += monomial(static_cast<int>(tr[0].get_si()), c);
    }
    return p;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        int e = lo_ + static_cast<int>(k);
        Rational a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem) {
    if (b.is_zero()) throw DivisionByZero();
    if ((!a.is_zero() && a.low() < 0) || b.low() < 0) throw std::invalid_argument("divmod: negative exponents");
    rem = a;
    quo = LaurentPoly();
    if (a.is_zero()) return;
    int db = b.high();
    std::vector<Rational> r(static_cast<size_t>(a.high() + 1), Rational(0));
    for (int e = a.low(); e <= a.high(); ++e) r[static_cast<size_t>(e)] = a.coeff(e);
    std::vector<Rational> bc(static_cast<size_t>(db + 1), Rational(0));
    for (int e = b.low(); e <= db; ++e) bc[static_cast<size_t>(e)] = b.coeff(e);
    Rational inv_lead = 1 / b.lead();
    std::vector<std::pair<int, Rational>> qterms;
    mpq_class t;
    for (int e = a.high(); e >= db; --e) {
        if (sgn(r[static_cast<size_t>(e)]) == 0) continue;
        Rational f = r[static_cast<size_t>(e)] * inv_lead;
        int s = e - db;
        for (int j = 0; j <= db; ++j) {
            if (sgn(bc[static_cast<size_t>(j)]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bc[static_cast<size_t>(j)].get_mpq_t());
            r[static_cast<size_t>(s + j)] -= t;
        }
        qterms.emplace_back(s, f);
    }
    quo = LaurentPoly();
    if (!qterms.empty()) {
        int qlo = qterms.back().first, qhi = qterms.front().first;
        quo.lo_ = qlo;
        quo.c_.assign(static_cast<size_t>(qhi - qlo + 1), Rational(0));
        for (auto& [e, c] : qterms) quo.c_[static_cast<size_t>(e - qlo)] = c;
        quo.trim();
    }
    rem = LaurentPoly();
    rem.lo_ = 0;
    rem.c_.assign(r.begin(), r.begin() + std::min<long>(db, static_cast<long>(r.size())));
    rem.trim();
}

namespace {

// Scale to a primitive integer polynomial with positive leading coefficient.
LaurentPoly primitive_part(const LaurentPoly& p, Rational* factor = nullptr) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (int e = p.low(); e <= p.high(); ++e) {
        Rational c = p.coeff(e);
        if (sgn(c) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (int e = p.low(); e <= p.high(); ++e) {
        Rational c = p.coeff(e);
        if (sgn(c) == 0) continue;
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    if (sgn(p.lead()) < 0) f = -f;
    if (factor) *factor = f;
    return p * f;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    int sa = a.low(), sb = b.low();
    int common = std::min(sa, sb);
    a = primitive_part(a.shifted(-sa));
    b = primitive_part(b.shifted(-sb));
    if (a.high() < b.high()) std::swap(a, b);
    LaurentPoly quo, rem;
    while (!b.is_zero()) {
        divmod(a, b, quo, rem);
        a = std::move(b);
        b = primitive_part(rem);
    }
    return primitive_part(a).shifted(common);
}

// ---------------- QRat ----------------

QRat::QRat(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { normalize(); }

void QRat::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int s = den_.low();
    if (s != 0) {
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
    }
    if (den_.is_constant()) {
        if (den_.lead() != 1) {
            num_ *= 1 / den_.lead();
            den_ = LaurentPoly(1);
        }
        return;
    }
    int t = num_.low();
    LaurentPoly np = num_.shifted(-t);
    LaurentPoly g = LaurentPoly::gcd(np, den_);
    if (g.high() > 0) {
        LaurentPoly quo, rem;
        LaurentPoly::divmod(np, g, quo, rem);
        np = quo;
        LaurentPoly::divmod(den_, g, quo, rem);
        den_ = quo;
    }
    Rational f;
    den_ = primitive_part(den_, &f);
    np *= f;
    num_ = np.shifted(t);
    if (den_.is_constant()) {
        num_ *= 1 / den_.lead();
        den_ = LaurentPoly(1);
    }
}

bool QRat::is_one() const { return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.lead() == 1; }

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat& QRat::operator+=(const QRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QRat();
    num_ = num_ * o.num_;
    if (o.den_.is_constant() && den_.is_constant()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return QRat(den_, num_);
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::pow(int e) const {
    QRat base = e < 0 ? inverse() : *this;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    QRat r(1);
    while (n) {
        if (n & 1U) r *= base;
        base *= base;
        n >>= 1U;
    }
    return r;
}

QRat QRat::substitute(int k) const { return QRat(num_.substitute(k), den_.substitute(k)); }
QRat QRat::mirror() const { return substitute(-1); }

std::string QRat::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------- q-combinatorics ----------------

LaurentPoly q_int_poly(long m, int r) {
    if (r == 0) throw std::invalid_argument("q_int: r must be nonzero");
    int ar = r < 0 ? -r : r;
    bool neg = m < 0;
    long am = neg ? -m : m;
    LaurentPoly p;
    for (long k = 0; k < am; ++k) p += LaurentPoly::monomial(static_cast<int>(ar * (am - 1 - 2 * k)));
    return neg ? -p : p;
}

QRat q_int(long m, int r) { return QRat(q_int_poly(m, r)); }

QRat q_factorial(long m, int r) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    LaurentPoly p(1);
    for (long s = 1; s <= m; ++s) p = p * q_int_poly(s, r);
    return QRat(p);
}

QRat q_binom(long r, long s, int m) {
    if (s < 0 || r < 0 || s > r) throw std::invalid_argument("q_binom: need 0 <= s <= r");
    QRat v = q_factorial(r, m) / (q_factorial(s, m) * q_factorial(r - s, m));
    if (!v.is_laurent()) throw std::logic_error("q_binom: quotient is not a Laurent polynomial");
    return v;
}

QRat exp_factorial(RootKind kind, int d_alpha, long m) {
    if (m < 0) throw std::invalid_argument("exp_factorial: negative argument");
    LaurentPoly p(1);
    for (long s = 1; s <= m; ++s) {
        if (kind == RootKind::Imaginary) {
            p *= Rational(s);
        } else {
            LaurentPoly f;
            for (long k = 0; k < s; ++k) f += LaurentPoly::monomial(static_cast<int>(2 * d_alpha * k));
            p = p * f;
        }
    }
    return QRat(p);
}

// ---------------- modular ----------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

ModScalar::ModScalar(std::uint64_t value, std::uint64_t p, std::uint64_t t) : v_(value % p), p_(p), t_(t) {}

ModScalar ModScalar::operator-() const { return ModScalar(v_ == 0 ? 0 : p_ - v_, p_, t_); }

ModScalar& ModScalar::operator+=(const ModScalar& o) {
    if (p_ == 0) p_ = o.p_, t_ = o.t_;
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

ModScalar& ModScalar::operator-=(const ModScalar& o) { return *this += -o; }

ModScalar& ModScalar::operator*=(const ModScalar& o) {
    if (p_ == 0) p_ = o.p_, t_ = o.t_;
    v_ = mulmod(v_, o.v_, p_);
    return *this;
}

ModScalar ModScalar::inverse() const {
    if (v_ == 0) throw DivisionByZero();
    return ModScalar(powmod(v_, p_ - 2, p_), p_, t_);
}

ModScalar& ModScalar::operator/=(const ModScalar& o) { return *this *= o.inverse(); }

namespace {

std::uint64_t rational_mod(const Rational& c, std::uint64_t p) {
    std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) throw PoleAtPoint();
    return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

ModScalar eval_mod(const LaurentPoly& x, std::uint64_t p, std::uint64_t t) {
    t %= p;
    if (t == 0) throw std::invalid_argument("eval_mod: evaluation point must be nonzero");
    if (x.is_zero()) return ModScalar(0, p, t);
    std::uint64_t acc = 0;
    for (int e = x.high(); e >= x.low(); --e) {
        acc = mulmod(acc, t, p);
        Rational c = x.coeff(e);
        if (sgn(c) != 0) acc = (acc + rational_mod(c, p)) % p;
    }
    // acc = sum c_e t^{e - low}
    std::uint64_t scale = x.low() >= 0 ? powmod(t, static_cast<std::uint64_t>(x.low()), p)
                                       : powmod(powmod(t, p - 2, p), static_cast<std::uint64_t>(-x.low()), p);
    return ModScalar(mulmod(acc, scale, p), p, t);
}

ModScalar eval_mod(const QRat& x, std::uint64_t p, std::uint64_t t) {
    ModScalar n = eval_mod(x.num(), p, t);
    ModScalar d = eval_mod(x.den(), p, t);
    if (d.is_zero()) throw PoleAtPoint();
    return n / d;
}

}  // namespace qaffine
