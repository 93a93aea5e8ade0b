#include "qaffine/weyl.hpp"

#include <algorithm>
#include <regex>

namespace qaffine {

namespace {

size_t u(long i) { return static_cast<size_t>(i); }

// Solve B_0 c = e_i over Q (B_0 restricted to I_0).
std::vector<Rational> solve_finite(const CartanDatum& D, int i) {
    const int n = D.n;
    std::vector<std::vector<Rational>> M(u(n), std::vector<Rational>(u(n + 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) M[u(r)][u(c)] = D.B[u(r + 1)][u(c + 1)];
        M[u(r)][u(n)] = (r + 1 == i) ? 1 : 0;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (sgn(M[u(p)][u(c)]) == 0) ++p;
        std::swap(M[u(p)], M[u(c)]);
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(M[u(r)][u(c)]) == 0) continue;
            Rational f = M[u(r)][u(c)] / M[u(c)][u(c)];
            for (int k = c; k <= n; ++k) M[u(r)][u(k)] -= f * M[u(c)][u(k)];
        }
    }
    std::vector<Rational> x(u(n + 1), 0);
    for (int r = 0; r < n; ++r) x[u(r + 1)] = M[u(r)][u(n)] / M[u(r)][u(r)];
    return x;
}

// w := w * s_j, updating columns in place.
void right_mul_reflection(const CartanDatum& D, QAut::Mat& w, int j) {
    const int sz = D.size();
    for (int k = 0; k < sz; ++k) {
        long a = D.A[u(j)][u(k)];
        if (k == j || a == 0) continue;
        for (int row = 0; row < sz; ++row) w[u(row)][u(k)] -= a * w[u(row)][u(j)];
    }
    for (int row = 0; row < sz; ++row) w[u(row)][u(j)] = -w[u(row)][u(j)];
}

RootVec act(const QAut::Mat& m, const RootVec& v) {
    RootVec r(m.size(), 0);
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (size_t i = 0; i < m.size(); ++i) r[i] += m[i][j] * v[j];
    }
    return r;
}

std::vector<RootVec> real_root_bases(const CartanDatum& D) {
    std::vector<RootVec> out = D.finite_roots();
    if (D.kind() == TwistKind::A2n)
        for (const auto& a : D.finite_roots())
            if (bilinear(D, a, a) == 2) out.push_back(2 * a);
    return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (size_t j = 0; j < b.size(); ++j) r[j] = a[u(b[j])];
    return r;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t j = 0; j < p.size(); ++j) r[u(p[j])] = static_cast<int>(j);
    return r;
}

}  // namespace

WeightVec fundamental_coweight(const CartanDatum& D, int i) {
    if (i < 1 || i > D.n) throw std::out_of_range("coweight index must lie in I_0");
    return {solve_finite(D, i)};
}

WeightVec lambda_weight(const CartanDatum& D, int i) { return static_cast<long>(D.dtilde[u(i)]) * fundamental_coweight(D, i); }

WeightVec omega_weight(const CartanDatum& D, int i) { return static_cast<long>(D.d[u(i)]) * fundamental_coweight(D, i); }

Rational pairing(const CartanDatum& D, const WeightVec& x, const RootVec& v) {
    Rational s = 0;
    for (size_t i = 1; i < x.c.size(); ++i) {
        if (sgn(x.c[i]) == 0) continue;
        long t = 0;
        for (size_t j = 0; j < v.size(); ++j) t += D.B[i][j] * v[j];
        s += x.c[i] * t;
    }
    return s;
}

WeightVec operator*(long s, const WeightVec& x) {
    WeightVec r = x;
    for (auto& c : r.c) c *= s;
    return r;
}

WeightVec operator+(const WeightVec& x, const WeightVec& y) {
    WeightVec r = x;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return r;
}

QAut QAut::identity(int size) {
    Mat m(u(size), std::vector<long>(u(size), 0));
    for (int i = 0; i < size; ++i) m[u(i)][u(i)] = 1;
    return QAut(m);
}

QAut QAut::reflection(const CartanDatum& D, int i) {
    Mat m = identity(D.size()).m_;
    right_mul_reflection(D, m, i);
    return QAut(m);
}

QAut QAut::translation(const CartanDatum& D, const WeightVec& x) {
    Mat m = identity(D.size()).m_;
    for (int j = 0; j < D.size(); ++j) {
        Rational p = pairing(D, x, D.simple(j));
        if (p.get_den() != 1) throw NonIntegralPairing("translation weight pairs non-integrally with alpha_" + std::to_string(j));
        long pj = p.get_num().get_si();
        for (int i = 0; i < D.size(); ++i) m[u(i)][u(j)] -= pj * D.marks[u(i)];
    }
    return QAut(m);
}

QAut QAut::diagram(const std::vector<int>& perm) {
    Mat m(perm.size(), std::vector<long>(perm.size(), 0));
    for (size_t j = 0; j < perm.size(); ++j) m[u(perm[j])][j] = 1;
    return QAut(m);
}

QAut QAut::word(const CartanDatum& D, const std::vector<int>& w) {
    Mat m = identity(D.size()).m_;
    for (int j : w) right_mul_reflection(D, m, j);
    return QAut(m);
}

RootVec QAut::operator()(const RootVec& v) const { return act(m_, v); }

QAut operator*(const QAut& a, const QAut& b) {
    const size_t n = a.m_.size();
    QAut::Mat m(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a.m_[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) m[i][j] += a.m_[i][k] * b.m_[k][j];
        }
    return QAut(m);
}

QAut QAut::inverse() const {
    const size_t n = m_.size();
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = m_[i][j];
        M[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(M[p][c]) == 0) ++p;
        if (p == n) throw std::domain_error("lattice map is not invertible");
        std::swap(M[p], M[c]);
        Rational pv = M[c][c];
        for (auto& x : M[c]) x /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sgn(M[r][c]) == 0) continue;
            Rational f = M[r][c];
            for (size_t k = 0; k < 2 * n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    Mat inv(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (M[i][n + j].get_den() != 1) throw std::domain_error("lattice map is not unimodular");
            inv[i][j] = M[i][n + j].get_num().get_si();
        }
    return QAut(inv);
}

QAut QAut::pow(long e) const {
    QAut base = e < 0 ? inverse() : *this;
    QAut r = identity(size());
    for (long k = 0; k < std::abs(e); ++k) r = r * base;
    return r;
}

bool QAut::preserves_form(const CartanDatum& D) const {
    for (int i = 0; i < D.size(); ++i)
        for (int j = i; j < D.size(); ++j)
            if (bilinear(D, (*this)(D.simple(i)), (*this)(D.simple(j))) != D.B[u(i)][u(j)]) return false;
    return true;
}

bool QAut::fixes_delta(const CartanDatum& D) const { return (*this)(D.delta()) == D.delta(); }

std::vector<int> QAut::permutation() const {
    std::vector<int> p(m_.size(), -1);
    for (size_t j = 0; j < m_.size(); ++j) {
        for (size_t i = 0; i < m_.size(); ++i) {
            if (m_[i][j] == 0) continue;
            if (m_[i][j] != 1 || p[j] != -1) return {};
            p[j] = static_cast<int>(i);
        }
        if (p[j] == -1) return {};
    }
    return p;
}

RootVec reflect(const CartanDatum& D, int i, const RootVec& v) {
    long c = 0;
    for (int j = 0; j < D.size(); ++j) c += D.A[u(i)][u(j)] * v[u(j)];
    RootVec w = v;
    w[u(i)] -= c;
    return w;
}

RootVec translate(const CartanDatum& D, const WeightVec& x, const RootVec& v) {
    Rational p = pairing(D, x, v);
    if (p.get_den() != 1) throw NonIntegralPairing("(x|v) is not an integer");
    return v - p.get_num().get_si() * D.delta();
}

std::vector<RootVec> inversion_list(const CartanDatum& D, const std::vector<int>& word) {
    std::vector<RootVec> out;
    std::set<RootVec> seen;
    QAut::Mat w = QAut::identity(D.size()).matrix();
    for (int j : word) {
        RootVec a = act(w, D.simple(j));
        if (!is_positive(a) || !seen.insert(a).second) throw NotReduced("word is not reduced");
        out.push_back(a);
        right_mul_reflection(D, w, j);
    }
    return out;
}

std::set<RootVec> inversion_set(const CartanDatum& D, const std::vector<int>& word) {
    auto l = inversion_list(D, word);
    return {l.begin(), l.end()};
}

std::set<RootVec> positive_inversions(const CartanDatum& D, const QAut& g) {
    if (g.size() != D.size() || !g.preserves_form(D) || !g.fixes_delta(D))
        throw NotInExtendedWeyl("map does not preserve the form and fix delta");
    for (int i = 0; i < D.size(); ++i)
        if (classify_root(D, g(D.simple(i))) != RootClass::Real) throw NotInExtendedWeyl("map does not permute the roots");
    QAut ginv = g.inverse();
    std::set<RootVec> out;
    for (const auto& a : real_root_bases(D)) {
        long c = split_delta(D, ginv(a)).first;
        for (long m = 0; m <= std::max(0L, -c); ++m) {
            RootVec v = a + m * D.delta();
            if (!is_positive(v) || classify_root(D, v) != RootClass::Real) continue;
            if (is_negative(ginv(v))) out.insert(v);
        }
    }
    return out;
}

long length(const CartanDatum& D, const QAut& g) { return static_cast<long>(positive_inversions(D, g).size()); }

bool length_additive(const CartanDatum& D, const QAut& g, const QAut& h) {
    auto a = positive_inversions(D, g);
    auto b = positive_inversions(D, g * h);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<RootVec> positive_real_roots(const CartanDatum& D, long max_m) {
    std::set<RootVec> out;
    for (const auto& a : real_root_bases(D))
        for (long m = 0; m <= max_m; ++m) {
            RootVec v = a + m * D.delta();
            if (is_positive(v) && classify_root(D, v) == RootClass::Real) out.insert(v);
        }
    return {out.begin(), out.end()};
}

int IotaTable::iota(long r) const {
    long q = (r - 1 >= 0) ? (r - 1) / N : -((N - r) / N);
    long s = r - q * N;
    int j = word[u(s - 1)];
    std::vector<int> p = q >= 0 ? tau : invert(tau);
    for (long k = 0; k < std::abs(q); ++k) j = p[u(j)];
    return j;
}

IotaTable iota_table(const CartanDatum& D) {
    IotaTable T;
    const int sz = D.size();
    std::vector<int> acc(u(sz));
    for (int i = 0; i < sz; ++i) acc[u(i)] = i;
    T.bounds.push_back(0);
    QAut product = QAut::identity(sz);
    for (int i = 1; i <= D.n; ++i) {
        QAut lam = QAut::translation(D, lambda_weight(D, i));
        product = product * lam;
        std::vector<int> w;
        std::vector<int> tau_i;
        if (D.kind() == TwistKind::A2n && i == 1) {
            for (int rep = 0; rep < D.n; ++rep) {
                w.push_back(0);
                for (int j = D.n; j >= 1; --j) w.push_back(j);
            }
            if (!(QAut::word(D, w) == lam)) throw std::logic_error("(s_0 s_n ... s_1)^n differs from the translation");
            for (int j = 0; j < sz; ++j) tau_i.push_back(j);
        } else {
            // greedy descent: peel the smallest simple root sent negative by g^{-1}
            QAut::Mat ginv = lam.inverse().matrix();
            while (true) {
                int pick = -1;
                for (int j = 0; j < sz && pick < 0; ++j)
                    if (is_negative(act(ginv, D.simple(j)))) pick = j;
                if (pick < 0) break;
                w.push_back(pick);
                // g := s_j g, so g^{-1} := g^{-1} s_j
                right_mul_reflection(D, ginv, pick);
            }
            tau_i = QAut(ginv).inverse().permutation();
            if (tau_i.empty()) throw std::logic_error("greedy descent did not end at a diagram automorphism");
        }
        for (int j : w) T.word.push_back(acc[u(j)]);
        acc = compose(acc, tau_i);
        T.tau_i.push_back(tau_i);
        T.bounds.push_back(static_cast<long>(T.word.size()));
    }
    T.N = static_cast<long>(T.word.size());
    T.tau = acc;
    if (!(QAut::word(D, T.word) * QAut::diagram(T.tau) == product))
        throw std::logic_error("iota word does not spell lambda_1...lambda_n");
    return T;
}

RootVec beta(const CartanDatum& D, const IotaTable& T, long r) { return beta_range(D, T, r, r).at(r); }

std::map<long, RootVec> beta_range(const CartanDatum& D, const IotaTable& T, long lo, long hi) {
    std::map<long, RootVec> out;
    if (hi >= 1) {
        QAut::Mat w = QAut::identity(D.size()).matrix();
        for (long r = 1; r <= hi; ++r) {
            int j = T.iota(r);
            if (r >= lo) out[r] = act(w, D.simple(j));
            right_mul_reflection(D, w, j);
        }
    }
    if (lo <= 0) {
        QAut::Mat w = QAut::identity(D.size()).matrix();
        for (long r = 0; r >= lo; --r) {
            int j = T.iota(r);
            if (r <= hi) out[r] = act(w, D.simple(j));
            right_mul_reflection(D, w, j);
        }
    }
    return out;
}

std::string RootSymbol::code() const {
    if (real) return "R" + std::to_string(r);
    return "I" + std::to_string(m) + "." + std::to_string(i);
}

RootSymbol RootSymbol::parse(const std::string& code) {
    static const std::regex re_r("^R(-?[0-9]+)$"), re_i("^I([0-9]+)\\.([0-9]+)$");
    std::smatch mt;
    if (std::regex_match(code, mt, re_r)) return Real(std::stol(mt[1].str()));
    if (std::regex_match(code, mt, re_i)) return Imag(std::stol(mt[1].str()), std::stoi(mt[2].str()));
    throw std::invalid_argument("bad root symbol '" + code + "'");
}

std::strong_ordering convex_compare(const RootSymbol& a, const RootSymbol& b) {
    auto key = [](const RootSymbol& s) {
        if (!s.real) return std::tuple<int, long, long>{1, -s.m, s.i};
        if (s.r <= 0) return std::tuple<int, long, long>{0, -s.r, 0};
        return std::tuple<int, long, long>{2, -s.r, 0};
    };
    return key(a) <=> key(b);
}

RootVec symbol_root(const CartanDatum& D, const IotaTable& T, const RootSymbol& s) {
    if (s.real) return beta(D, T, s.r);
    return s.m * D.delta();
}

}  // namespace qaffine
