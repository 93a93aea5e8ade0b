// Identity catalog for the free-algebra models, run at modular points or exactly.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "qaffine/imagblock.hpp"
#include "qaffine/rank2.hpp"
#include "qaffine/rmat.hpp"

namespace qaffine::rank2 {

namespace {

QRat qq(int e) { return QRat::q(e); }
QRat qn(long m) { return q_int(m); }

// [2m]/m (q^{2m} + (-1)^{m-1} + q^{-2m})
QRat imag_constant(long m) {
    int e = static_cast<int>(2 * m);
    return qn(2 * m) / QRat(m) * (qq(e) + QRat(m % 2 ? 1 : -1) + qq(-e));
}

template <class F>
struct Ctx {
    using S = typename F::S;
    using Poly = NCPoly<S>;
    using KPoly = typename Algebra<F>::KPoly;

    Ctx(const CartanDatum& D, F f, int H) : A(D, f, std::max(H, 1)), Am(D, f.mirrored(), std::max(H, 1)), R(A), Rm(Am), H(H) {}

    Algebra<F> A, Am;
    RootVectors<F> R, Rm;
    int H;

    S c(const QRat& x) const { return A.c(x); }
    Poly E(int i) const { return A.gen(i); }
    Poly k(const QRat& x) const { return A.constant(x); }
    RootVec simple(int i) const { return A.datum().simple(i); }

    // weights where x - y is not in the ideal
    std::string diff(const Poly& x, const Poly& y) {
        Poly d = x - y;
        std::map<RootVec, Poly> parts;
        for (const auto& [w, c] : d.terms) parts[A.word_weight(w)].add(w, c);
        std::string out;
        for (const auto& [eta, p] : parts)
            if (!A.zero_mod(p)) out += (out.empty() ? "" : ",") + root_str(eta);
        return out;
    }

    void eq(CheckSink& s, const Poly& x, const Poly& y, const std::string& what) {
        bool ok = A.equal_mod(x, y);
        s.expect(ok, ok ? what : what + " differs at weight " + diff(x, y));
    }

    void keq(CheckSink& s, const KPoly& x, const KPoly& y, const std::string& what) {
        bool ok = A.equal_mod(x, y);
        std::string where;
        if (!ok) {
            std::set<RootVec> tags;
            for (const auto& [t, p] : x) tags.insert(t);
            for (const auto& [t, p] : y) tags.insert(t);
            for (const auto& t : tags) {
                Poly a = x.count(t) ? x.at(t) : Poly{}, b = y.count(t) ? y.at(t) : Poly{};
                if (!A.equal_mod(a, b)) where += " K" + root_str(t) + ":" + diff(a, b);
            }
        }
        s.expect(ok, ok ? what : what + " differs at" + where);
    }

    void same(CheckSink& s, const S& x, const S& y, const std::string& what) {
        bool ok = (x - y).is_zero();
        s.expect(ok, ok ? what : what + ": " + x.str() + " vs " + y.str());
    }

    bool fits(long h, CheckSink& s, const std::string& what) {
        if (h <= H) return true;
        s.note(what + " needs height " + std::to_string(h));
        return false;
    }
};

// ---------------- linear algebra over the scalar field ----------------

template <class S>
int rank_of(std::vector<std::vector<S>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        auto r0 = static_cast<size_t>(rank);
        size_t piv = r0;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r0]);
        for (size_t r = r0 + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            S f = m[r][col] / m[r0][col];
            for (size_t k = col; k < cols; ++k) m[r][k] -= f * m[r0][k];
        }
        ++rank;
    }
    return rank;
}

// c with sum_k c_k rows[k] = x, if it exists and rows are independent
template <class S>
std::optional<std::vector<S>> solve_rows(const std::vector<std::vector<S>>& rows, const std::vector<S>& x, const S& zero) {
    size_t n = rows.size(), d = x.size();
    // augmented transpose: d equations in n unknowns
    std::vector<std::vector<S>> m(d, std::vector<S>(n + 1, zero));
    for (size_t e = 0; e < d; ++e) {
        for (size_t k = 0; k < n; ++k) m[e][k] = rows[k][e];
        m[e][n] = x[e];
    }
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t col = 0; col < n && r < d; ++col) {
        size_t piv = r;
        while (piv < d && m[piv][col].is_zero()) ++piv;
        if (piv == d) return std::nullopt;
        std::swap(m[piv], m[r]);
        S inv = S(m[r][col]).inverse();
        for (auto& v : m[r]) v *= inv;
        for (size_t e = 0; e < d; ++e) {
            if (e == r || m[e][col].is_zero()) continue;
            S f = m[e][col];
            for (size_t k = col; k <= n; ++k) m[e][k] -= f * m[r][k];
        }
        pivcol.push_back(col);
        ++r;
    }
    if (r < n) return std::nullopt;
    for (size_t e = r; e < d; ++e)
        if (!m[e][n].is_zero()) return std::nullopt;
    std::vector<S> c(n, zero);
    for (size_t k = 0; k < r; ++k) c[pivcol[k]] = m[k][n];
    return c;
}

// all weights of the given height (nonnegative, size components)
std::vector<RootVec> weights_of_height(int size, long h) {
    std::vector<RootVec> out;
    RootVec v(static_cast<size_t>(size), 0);
    std::function<void(size_t, long)> go = [&](size_t i, long left) {
        if (i + 1 == v.size()) {
            v[i] = left;
            out.push_back(v);
            return;
        }
        for (long x = 0; x <= left; ++x) {
            v[i] = x;
            go(i + 1, left - x);
        }
    };
    go(0, h);
    return out;
}

// ---------------- A_2^(2): explicit root vectors ----------------

template <class F>
void tilde_delta_expansion(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(3, s, "tilde delta")) return;
    x.eq(s, x.R.tilde(1), x.R.tilde_closed(), "tilde E_delta expansion");
}

template <class F>
void delta_plus_expansion(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(4, s, "delta + alpha_1")) return;
    const auto& t = x.R.tilde(1);
    auto lhs = t * x.E(1) - x.E(1) * t;
    x.eq(s, lhs, x.R.plus_closed() * x.c(-q_factorial(3)), "[tilde E_delta, E_1]");
    x.eq(s, x.R.plus(1), x.R.plus_closed(), "E_{delta+alpha_1} closed form");
}

template <class F>
void delta_minus_f1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(2, s, "delta - alpha_1")) return;
    auto rhs = x.A.k_left(x.simple(1), x.E(0) * x.c(-qn(4)));
    x.keq(s, x.A.bracket_f(x.R.minus(1), 1), rhs, "[E_{delta-alpha_1}, F_1]");
}

template <class F>
void delta_plus2_e1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(5, s, "delta + 2 alpha_1")) return;
    const auto& p = x.R.plus(1);
    auto lhs = x.E(1) * p - p * x.E(1) * x.c(qq(-2));
    x.eq(s, lhs, x.R.plus2() * x.c(qq(-2) * qn(4)), "E_1 E_{delta+alpha_1} q-commutator");
}

template <class F>
void tilde_delta_f1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(3, s, "tilde delta")) return;
    auto rhs = x.A.k_left(x.simple(1), x.R.minus(1) * x.c(-q_factorial(3)));
    x.keq(s, x.A.bracket_f(x.R.tilde(1), 1), rhs, "[tilde E_delta, F_1]");
}

template <class F>
void delta_plus_f1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(4, s, "delta + alpha_1")) return;
    auto rhs = x.A.k_left(x.simple(1), x.R.tilde(1) * x.c(QRat(-1)));
    x.keq(s, x.A.bracket_f(x.R.plus(1), 1), rhs, "[E_{delta+alpha_1}, F_1]");
}

template <class F>
void tilde_delta_f0(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(3, s, "tilde delta")) return;
    auto rhs = x.A.k_right(-x.simple(0), x.E(1) * x.E(1) * x.c(-(qq(2) - QRat(1)) * qn(3)));
    x.keq(s, x.A.bracket_f(x.R.tilde(1), 0), rhs, "[tilde E_delta, F_0]");
}

template <class F>
void tilde_delta_e0(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(4, s, "[tilde E_delta, E_0]")) return;
    const auto& t = x.R.tilde(1);
    const auto& m = x.R.minus(1);
    x.eq(s, t * x.E(0) - x.E(0) * t, m * m * x.c(-(qq(2) - QRat(1)) * qn(3)), "[tilde E_delta, E_0]");
}

// ---------------- A_2^(2): tilde ladders ----------------

template <class F>
void tilde_e0_ladder(Ctx<F>& x, CheckSink& s) {
    auto& R = x.R;
    for (long m = 1; 3 * m - 1 <= x.H; ++m) {
        auto lhs = x.E(0) * R.plus(m - 1) - R.plus(m - 1) * x.E(0) * x.c(qq(-4));
        auto rhs = (R.minus(1) * R.tilde(m - 1) * x.c(qq(4) - qq(2) - qq(-2)) +
                    R.tilde(m - 1) * R.minus(1) * x.c(qq(2) + qq(-2) - qq(-4)) + R.minus(2) * R.tilde(m - 2) * x.c(qq(2)) -
                    R.tilde(m - 2) * R.minus(2) * x.c(qq(-2))) *
                   x.c(qn(4).inverse());
        x.eq(s, lhs, rhs, "E_0 ladder m=" + std::to_string(m));
    }
    x.fits(2, s, "E_0 ladder");
}

template <class F>
void tilde_e1(Ctx<F>& x, CheckSink& s) {
    auto& R = x.R;
    for (long m = 1; 3 * m + 1 <= x.H; ++m) {
        const auto& t = R.tilde(m);
        auto lhs = t * x.E(1) - x.E(1) * t;
        auto rhs = R.tilde(m - 1) * R.plus(1) * x.c(qq(4) - qq(-2)) + R.plus(1) * R.tilde(m - 1) * x.c(qq(2) - qq(-4)) +
                   R.tilde(m - 2) * R.plus(2) * x.c(qq(2)) - R.plus(2) * R.tilde(m - 2) * x.c(qq(-2));
        x.eq(s, lhs, rhs, "[tilde E_m, E_1] m=" + std::to_string(m));
    }
    x.fits(4, s, "[tilde E_m, E_1]");
}

template <class F>
void tilde_delta_minus(Ctx<F>& x, CheckSink& s) {
    auto& R = x.R;
    for (long m = 1; 3 * m + 2 <= x.H; ++m) {
        const auto& t = R.tilde(m);
        auto lhs = t * R.minus(1) - R.minus(1) * t;
        auto rhs = R.minus(2) * R.tilde(m - 1) * x.c(-(qq(4) - qq(-2))) - R.tilde(m - 1) * R.minus(2) * x.c(qq(2) - qq(-4)) -
                   R.minus(3) * R.tilde(m - 2) * x.c(qq(2)) + R.tilde(m - 2) * R.minus(3) * x.c(qq(-2));
        x.eq(s, lhs, rhs, "[tilde E_m, E_{delta-alpha_1}] m=" + std::to_string(m));
    }
    x.fits(5, s, "[tilde E_m, E_{delta-alpha_1}]");
}

template <class F>
void tilde_commute(Ctx<F>& x, CheckSink& s) {
    for (long r = 1; 3 * (r + r + 1) <= x.H; ++r)
        for (long t = r + 1; 3 * (r + t) <= x.H; ++t)
            x.eq(s, x.R.tilde(r) * x.R.tilde(t), x.R.tilde(t) * x.R.tilde(r),
                 "[tilde E_" + std::to_string(r) + ", tilde E_" + std::to_string(t) + "]");
    x.fits(9, s, "[tilde E_r, tilde E_s]");
}

// ---------------- A_2^(2): E_{m delta} ----------------

template <class F>
void imag_e1(Ctx<F>& x, CheckSink& s) {
    for (long m = 1; 3 * m + 1 <= x.H; ++m) {
        const auto& e = x.R.imag(m);
        x.eq(s, e * x.E(1) - x.E(1) * e, x.R.plus(m) * x.c(imag_constant(m)), "[E_m, E_1] m=" + std::to_string(m));
    }
    x.fits(4, s, "[E_m, E_1]");
}

template <class F>
void imag_plus_ladder(Ctx<F>& x, CheckSink& s) {
    for (long m = 1; 3 * (m + 1) + 1 <= x.H; ++m)
        for (long r = 1; 3 * (m + r) + 1 <= x.H; ++r) {
            const auto& e = x.R.imag(m);
            const auto& p = x.R.plus(r);
            x.eq(s, e * p - p * e, x.R.plus(m + r) * x.c(imag_constant(m)),
                 "[E_m, E_{r delta+alpha_1}] m=" + std::to_string(m) + " r=" + std::to_string(r));
        }
    x.fits(7, s, "[E_m, E_{r delta+alpha_1}]");
}

template <class F>
void imag_minus_ladder(Ctx<F>& x, CheckSink& s) {
    for (long m = 1; 3 * (m + 1) - 1 <= x.H; ++m)
        for (long r = 0; 3 * (m + r + 1) - 1 <= x.H; ++r) {
            const auto& e = x.R.imag(m);
            const auto& p = x.R.minus(r + 1);
            x.eq(s, e * p - p * e, x.R.minus(m + r + 1) * x.c(-imag_constant(m)),
                 "[E_m, E_{(r+1)delta-alpha_1}] m=" + std::to_string(m) + " r=" + std::to_string(r));
        }
    x.fits(5, s, "[E_m, E_{(r+1)delta-alpha_1}]");
}

template <class F>
void heisenberg(Ctx<F>& x, CheckSink& s) {
    for (long r = 1; 3 * (2 * r + 1) <= x.H; ++r)
        for (long t = r + 1; 3 * (r + t) <= x.H; ++t) {
            const auto& a = x.R.imag(r);
            const auto& b = x.R.imag(t);
            x.eq(s, a * b, b * a, "[E_" + std::to_string(r) + ", E_" + std::to_string(t) + "]");
        }
    QRat h = qq(1) - qq(-1);
    for (long r = 1; 3 * r <= x.H; ++r)
        x.same(s, x.A.pair(x.R.imag(r), x.Rm.imag(r)), x.c(-imag_constant(r) / h), "(E_r, F_r) r=" + std::to_string(r));
    x.fits(3, s, "imaginary pairing");
}

template <class F>
void imag_gram_vs_table(Ctx<F>& x, CheckSink& s) {
    const auto& D = x.A.datum();
    for (long r = 1; r <= 4 && 3 * r <= x.H; ++r)
        x.same(s, x.A.pair(x.R.imag(r), x.Rm.imag(r)), x.c(h_matrix(D, r).at(0, 0)), "Gram entry r=" + std::to_string(r));
    x.fits(3, s, "imaginary Gram entry");
}

// ---------------- structural properties (both models) ----------------

template <class F>
void skew_kills_relators(Ctx<F>& x, CheckSink& s) {
    auto& A = x.A;
    int n = A.datum().size();
    for (const auto& S0 : A.relators()) {
        long h = height(A.weight(S0));
        std::vector<typename Ctx<F>::Poly> cases{S0};
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) cases.push_back(A.gen(u) * S0 * A.gen(v));
        for (size_t k = 0; k < cases.size(); ++k) {
            if (h + (k ? 2 : 0) > x.H) continue;
            for (int i = 0; i < n; ++i)
                for (Side side : {Side::Left, Side::Right}) {
                    bool ok = A.zero_mod(A.skew(i, side, cases[k]));
                    s.expect(ok, std::string(side == Side::Left ? "r_" : "r'_") + std::to_string(i) + " of relator " +
                                     cases[k].str() + " not in the ideal");
                }
        }
    }
    x.fits(3, s, "relators");
}

template <class F>
void pairing_symmetry(Ctx<F>& x, CheckSink& s) {
    auto& A = x.A;
    std::mt19937_64 rng(20240611);
    int n = A.datum().size();
    long top = std::min(x.H, 6);
    for (long h = 1; h <= top; ++h) {
        auto ws = weights_of_height(n, h);
        for (int trial = 0; trial < 6; ++trial) {
            const RootVec& eta = ws[rng() % ws.size()];
            auto words = A.words_of(eta);
            auto random_elem = [&] {
                typename Ctx<F>::Poly p;
                for (int t = 0; t < 4; ++t) {
                    int e = static_cast<int>(rng() % 7) - 3;
                    long c = static_cast<long>(rng() % 9) - 4;
                    p.add(words[rng() % words.size()], x.c(QRat(c) * qq(e)));
                }
                return p;
            };
            auto a = random_elem(), b = random_elem();
            auto ab = A.pair(a, b);
            x.same(s, ab, A.pair(b, a), "pairing symmetry at " + root_str(eta));
            x.same(s, ab, A.pair(a.reversed(), b.reversed()), "pairing under word reversal at " + root_str(eta));
            x.same(s, ab, A.pair(a, b, Side::Right), "left and right peel at " + root_str(eta));
        }
    }
    // on the imaginary span the pairing is odd under q -> q^{-1}
    if (A.datum().type.str() == "A2:2")
        for (long r = 1; 3 * r <= x.H; ++r)
            x.same(s, x.Am.pair(x.Rm.imag(r), x.R.imag(r)), -A.pair(x.R.imag(r), x.Rm.imag(r)),
                   "mirror oddness of (E_r, F_r) r=" + std::to_string(r));
}

template <class F>
void gram_kernel(Ctx<F>& x, CheckSink& s, long cap) {
    auto& A = x.A;
    long top = std::min<long>(x.H, cap);
    for (long h = 1; h <= top; ++h)
        for (const auto& eta : weights_of_height(A.datum().size(), h)) {
            const auto& G = A.word_gram(eta);
            const auto& sl = A.slice(eta);
            bool killed = true;
            for (const auto& row : sl.rows)
                for (size_t u = 0; u < G.size() && killed; ++u) {
                    auto acc = x.c(QRat(0));
                    for (size_t k = 0; k < row.size(); ++k)
                        if (!row[k].is_zero()) acc += G[u][k] * row[k];
                    killed = acc.is_zero();
                }
            s.expect(killed, "ideal not in the Gram kernel at " + root_str(eta));
            int rk = rank_of(G);
            s.expect(rk == sl.dim(), "Gram rank " + std::to_string(rk) + " vs quotient dim " + std::to_string(sl.dim()) + " at " +
                                         root_str(eta));
        }
}

template <class F>
void serre_dim(Ctx<F>& x, CheckSink& s, long cap) {
    auto& A = x.A;
    const auto& D = A.datum();
    long top = std::min<long>(x.H, cap);
    std::map<RootVec, long> pbw;
    for (const auto& g : rmat::enumerate_pbw(D, static_cast<int>(top))) ++pbw[g.weight];
    for (long h = 1; h <= top; ++h)
        for (const auto& eta : weights_of_height(D.size(), h)) {
            long dim = A.slice(eta).dim();
            long parts = partition_count(D, eta);
            s.expect(dim == parts, "dim " + std::to_string(dim) + " vs partitions " + std::to_string(parts) + " at " + root_str(eta));
            long count = pbw.count(eta) ? pbw.at(eta) : 0;
            s.expect(dim == count, "dim " + std::to_string(dim) + " vs PBW count " + std::to_string(count) + " at " + root_str(eta));
        }
}

// ---------------- A_2^(2): PBW basis ----------------

template <class F>
std::map<RootVec, std::vector<rmat::PBWMonomial>> pbw_by_weight(const CartanDatum& D, long top) {
    std::map<RootVec, std::vector<rmat::PBWMonomial>> out;
    for (auto& g : rmat::enumerate_pbw(D, static_cast<int>(top)))
        if (!g.symbols.empty()) out[g.weight].push_back(std::move(g));
    return out;
}

template <class F>
typename Ctx<F>::Poly omega_side(Ctx<F>& x, const rmat::PBWMonomial& g) {
    std::vector<RootSymbol> rev(g.symbols.rbegin(), g.symbols.rend());
    return x.Rm.pbw_element(rev);
}

template <class F>
void pbw_spans(Ctx<F>& x, CheckSink& s) {
    long top = std::min(x.H, 6);
    for (const auto& [eta, gs] : pbw_by_weight<F>(x.A.datum(), top)) {
        std::vector<std::vector<typename F::S>> rows;
        for (const auto& g : gs) rows.push_back(x.A.coordinates(x.R.pbw_element(g.symbols)));
        int rk = rank_of(rows);
        s.expect(rk == x.A.slice(eta).dim(), "PBW rank " + std::to_string(rk) + " at " + root_str(eta));
    }
}

template <class F>
void ls_shape(Ctx<F>& x, CheckSink& s) {
    const auto& D = x.A.datum();
    long top = std::min(x.H, 6);
    auto by = pbw_by_weight<F>(D, top);
    std::vector<std::pair<RootSymbol, RootVec>> roots;
    for (const auto& [eta, gs] : by)
        for (const auto& g : gs)
            if (g.symbols.size() == 1) roots.emplace_back(g.symbols[0], eta);
    auto zero = x.c(QRat(0));
    for (const auto& [a, ra] : roots)
        for (const auto& [b, rb] : roots) {
            if (!convex_less(b, a) || height(ra) + height(rb) > top) continue;
            auto Ea = x.R.root_vector(a), Eb = x.R.root_vector(b);
            auto X = Ea * Eb - Eb * Ea * x.A.qpow(bilinear(D, ra, rb));
            RootVec eta = ra + rb;
            const auto& gs = by.at(eta);
            std::vector<std::vector<typename F::S>> rows;
            for (const auto& g : gs) rows.push_back(x.A.coordinates(x.R.pbw_element(g.symbols)));
            std::vector<typename F::S> target =
                X.is_zero() ? std::vector<typename F::S>(static_cast<size_t>(x.A.slice(eta).dim()), zero) : x.A.coordinates(X);
            auto coef = solve_rows(rows, target, zero);
            std::string what = "q-commutator of " + a.code() + "," + b.code();
            if (!coef) {
                s.expect(false, what + ": PBW system singular");
                continue;
            }
            bool inside = true;
            for (size_t k = 0; k < gs.size(); ++k) {
                if ((*coef)[k].is_zero()) continue;
                for (const auto& sym : gs[k].symbols) inside = inside && convex_less(b, sym) && convex_less(sym, a);
            }
            s.expect(inside, what + " leaves the open interval");
        }
}

template <class F>
void pbw_pairing_product(Ctx<F>& x, CheckSink& s) {
    const auto& D = x.A.datum();
    long top = std::min(x.H, 5);
    IotaTable T = iota_table(D);
    for (const auto& [eta, gs] : pbw_by_weight<F>(D, top)) {
        std::vector<const rmat::PBWMonomial*> real;
        for (const auto& g : gs)
            if (std::all_of(g.symbols.begin(), g.symbols.end(), [](const RootSymbol& y) { return y.real; })) real.push_back(&g);
        for (const auto* g : real)
            for (const auto* h : real) {
                auto val = x.A.pair(x.R.pbw_element(g->symbols), omega_side(x, *h));
                QRat expect(0);
                if (g == h) {
                    expect = QRat(1);
                    for (size_t k = 0; k < g->symbols.size();) {
                        size_t j = k;
                        while (j < g->symbols.size() && g->symbols[j] == g->symbols[k]) ++j;
                        RootVec a = symbol_root(D, T, g->symbols[k]);
                        int d = static_cast<int>(bilinear(D, a, a) / 2);
                        auto mu = static_cast<long>(j - k);
                        expect *= exp_factorial(RootKind::Real, d, mu) / (qq(-d) - qq(d)).pow(static_cast<int>(mu));
                        k = j;
                    }
                }
                std::string gc, hc;
                for (const auto& c : g->codes()) gc += c + " ";
                for (const auto& c : h->codes()) hc += c + " ";
                x.same(s, val, x.c(expect), "(E(" + gc + "), F(" + hc + "))");
            }
    }
}

template <class F>
void canonical_element(Ctx<F>& x, CheckSink& s) {
    const auto& D = x.A.datum();
    long top = std::min(x.H, 5);
    auto trunc = rmat::r_truncated(D, static_cast<int>(top), rmat::Form::Mixed);
    std::map<RootVec, std::vector<const rmat::RTerm*>> terms;
    for (const auto& t : trunc.terms)
        if (!t.gamma.symbols.empty()) terms[t.gamma.weight].push_back(&t);
    auto zero = x.c(QRat(0));
    for (const auto& [eta, gs] : pbw_by_weight<F>(D, top)) {
        size_t n = gs.size();
        auto index = [&](const rmat::PBWMonomial& g) {
            for (size_t k = 0; k < n; ++k)
                if (gs[k] == g) return k;
            throw std::logic_error("term outside the PBW list");
        };
        std::vector<std::vector<typename F::S>> M(n, std::vector<typename F::S>(n, zero)), G = M;
        for (const auto* t : terms[eta]) M[index(t->gamma)][index(t->gamma_prime)] = x.c(t->coeff);
        std::vector<typename Ctx<F>::Poly> Es, Fs;
        for (const auto& g : gs) {
            Es.push_back(x.R.pbw_element(g.symbols));
            Fs.push_back(omega_side(x, g));
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) G[a][b] = x.A.pair(Es[a], Fs[b]);
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            for (size_t b = 0; b < n && ok; ++b) {
                auto acc = zero;
                for (size_t k = 0; k < n; ++k) acc += M[a][k] * G[b][k];
                ok = (acc - x.c(QRat(a == b ? 1 : 0))).is_zero();
            }
        s.expect(ok, "M G^t != I at " + root_str(eta));
    }
}

// ---------------- A_4^(2) ----------------

template <class F>
void a4_q_commute(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(7, s, "q-commutation")) return;
    const auto& m = x.R.a4_minus();
    const auto& y = x.R.ladder_x1();
    x.eq(s, m * y, y * m * x.c(qq(-4)), "E_{delta-alpha_1} E_{delta-2alpha_1}");
}

template <class F>
void a4_minus_normalized(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(4, s, "delta - alpha_1")) return;
    x.same(s, x.A.pair(x.R.a4_minus(), x.Rm.a4_minus()), x.c((qq(-1) - qq(1)).inverse()), "(E_{delta-alpha_1}, F_{delta-alpha_1})");
    x.same(s, x.A.pair(x.R.ladder_x1(), x.Rm.ladder_x1()), x.c((qq(-4) - qq(4)).inverse()),
           "(E_{delta-2alpha_1}, F_{delta-2alpha_1})");
}

template <class F>
void a4_serre_two(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(7, s, "degree-two relation")) return;
    const auto& y = x.R.ladder_x1();
    typename Ctx<F>::Poly acc;
    for (long r = 0; r <= 2; ++r) {
        auto term = x.A.one();
        for (long k = 0; k < r; ++k) term = term * y;
        term = term * x.E(1);
        for (long k = r; k < 2; ++k) term = term * y;
        acc += term * x.c((r % 2 ? QRat(-1) : QRat(1)) * q_binom(2, r, 4));
    }
    s.expect(x.A.zero_mod(acc), "degree-two relation in E_{delta-2alpha_1}, E_1");
}

template <class F>
void a4_serre_five(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(8, s, "degree-five relation")) return;
    const auto& y = x.R.ladder_x1();
    typename Ctx<F>::Poly acc;
    for (long r = 0; r <= 5; ++r) acc += x.A.divided(1, r) * y * x.A.divided(1, 5 - r) * x.c(QRat(r % 2 ? -1 : 1));
    s.expect(x.A.zero_mod(acc), "degree-five relation in E_1, E_{delta-2alpha_1}");
}

template <class F>
void a4_delta_minus_f1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(4, s, "delta - alpha_1")) return;
    auto rhs = x.A.k_left(x.simple(1), x.R.ladder_x1() * x.c(-qn(4)));
    x.keq(s, x.A.bracket_f(x.R.a4_minus(), 1), rhs, "[E_{delta-alpha_1}, F_1]");
}

template <class F>
void a4_x_f1(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(3, s, "delta - 2 alpha_1")) return;
    x.keq(s, x.A.bracket_f(x.R.ladder_x1(), 1), {}, "[E_{delta-2alpha_1}, F_1]");
}

template <class F>
void a4_t1_inverse(Ctx<F>& x, CheckSink& s) {
    if (!x.fits(7, s, "T_1^{-1} image")) return;
    const auto& y = x.R.ladder_x1();
    int n = x.A.datum().size();
    std::vector<typename Ctx<F>::Poly> image;
    for (int j = 0; j < n; ++j) image.push_back(j == 1 ? x.E(1) : x.R.t_inverse(1, j));
    typename Ctx<F>::Poly lhs;
    for (const auto& [w, c] : y.terms) {
        auto term = x.A.one();
        for (char l : w) term = term * image[static_cast<size_t>(l)];
        lhs += term * c;
    }
    typename Ctx<F>::Poly rhs;
    for (long r = 0; r <= 4; ++r)
        rhs += x.A.divided(1, r) * y * x.A.divided(1, 4 - r) * x.c((r % 2 ? QRat(-1) : QRat(1)) * qq(static_cast<int>(-r)));
    x.eq(s, lhs, rhs, "T_1^{-1}(E_{delta-2alpha_1})");
}

template <class F>
void a4_qbinomial_step(Ctx<F>& x, CheckSink& s) {
    for (long k = 0; k <= 6; ++k)
        for (int p = -4; p <= 4; ++p)
            for (long r = 0; r <= k + 1; ++r) {
                QRat lhs = qq(static_cast<int>((p + 1) * r)) * q_binom(k + 1, r);
                QRat rhs;
                if (r <= k) rhs += qq(static_cast<int>(p * r)) * q_binom(k, r);
                if (r >= 1) rhs += qq(static_cast<int>(k + p + 1 + p * (r - 1))) * q_binom(k, r - 1);
                x.same(s, x.c(lhs), x.c(rhs), "q-binomial step k=" + std::to_string(k) + " p=" + std::to_string(p));
            }
    // the step applied to E_1, E_2 from their Serre relation (k = 3, p = 0)
    if (!x.fits(5, s, "lifted Serre relation")) return;
    typename Ctx<F>::Poly acc;
    for (long r = 0; r <= 4; ++r) {
        Word w(static_cast<size_t>(r), 1);
        w.push_back(2);
        w.append(static_cast<size_t>(4 - r), 1);
        acc.add(w, x.c((r % 2 ? QRat(-1) : QRat(1)) * qq(static_cast<int>(r)) * q_binom(4, r)));
    }
    s.expect(x.A.zero_mod(acc), "lifted relation between E_1 and E_2");
}

// ---------------- registry ----------------

template <class F>
struct Entry {
    const char* id;
    const char* model;
    std::function<void(Ctx<F>&, CheckSink&)> fn;
};

template <class F>
std::vector<Entry<F>> registry() {
    return {
        {"a22.canonical-element", "A2:2", canonical_element<F>},
        {"a22.delta-minus-f1", "A2:2", delta_minus_f1<F>},
        {"a22.delta-plus-expansion", "A2:2", delta_plus_expansion<F>},
        {"a22.delta-plus-f1", "A2:2", delta_plus_f1<F>},
        {"a22.delta-plus2-e1", "A2:2", delta_plus2_e1<F>},
        {"a22.gram-kernel", "A2:2", [](Ctx<F>& x, CheckSink& s) { gram_kernel(x, s, 8); }},
        {"a22.heisenberg", "A2:2", heisenberg<F>},
        {"a22.imag-e1", "A2:2", imag_e1<F>},
        {"a22.imag-gram-vs-table", "A2:2", imag_gram_vs_table<F>},
        {"a22.imag-minus-ladder", "A2:2", imag_minus_ladder<F>},
        {"a22.imag-plus-ladder", "A2:2", imag_plus_ladder<F>},
        {"a22.ls-shape", "A2:2", ls_shape<F>},
        {"a22.pairing-symmetry", "A2:2", pairing_symmetry<F>},
        {"a22.pbw-pairing-product", "A2:2", pbw_pairing_product<F>},
        {"a22.pbw-spans", "A2:2", pbw_spans<F>},
        {"a22.serre-dim", "A2:2", [](Ctx<F>& x, CheckSink& s) { serre_dim(x, s, 10); }},
        {"a22.skew-kills-relators", "A2:2", skew_kills_relators<F>},
        {"a22.tilde-commute", "A2:2", tilde_commute<F>},
        {"a22.tilde-delta-e0", "A2:2", tilde_delta_e0<F>},
        {"a22.tilde-delta-expansion", "A2:2", tilde_delta_expansion<F>},
        {"a22.tilde-delta-f0", "A2:2", tilde_delta_f0<F>},
        {"a22.tilde-delta-f1", "A2:2", tilde_delta_f1<F>},
        {"a22.tilde-delta-minus", "A2:2", tilde_delta_minus<F>},
        {"a22.tilde-e0-ladder", "A2:2", tilde_e0_ladder<F>},
        {"a22.tilde-e1", "A2:2", tilde_e1<F>},
        {"a42.delta-minus-f1", "A4:2", a4_delta_minus_f1<F>},
        {"a42.delta-minus-normalized", "A4:2", a4_minus_normalized<F>},
        {"a42.gram-kernel", "A4:2", [](Ctx<F>& x, CheckSink& s) { gram_kernel(x, s, 6); }},
        {"a42.pairing-symmetry", "A4:2", pairing_symmetry<F>},
        {"a42.q-commute", "A4:2", a4_q_commute<F>},
        {"a42.qbinomial-step", "A4:2", a4_qbinomial_step<F>},
        {"a42.serre-degree-five", "A4:2", a4_serre_five<F>},
        {"a42.serre-degree-two", "A4:2", a4_serre_two<F>},
        {"a42.serre-dim", "A4:2", [](Ctx<F>& x, CheckSink& s) { serre_dim(x, s, 8); }},
        {"a42.skew-kills-relators", "A4:2", skew_kills_relators<F>},
        {"a42.t1-inverse-image", "A4:2", a4_t1_inverse<F>},
        {"a42.x-f1-commute", "A4:2", a4_x_f1<F>},
    };
}

struct Outcome {
    CheckResult r;
    std::string notes;
};

template <class F>
std::map<std::string, Outcome> run_model(const std::string& model, const std::set<std::string>& ids, F field, int H) {
    std::map<std::string, Outcome> out;
    auto ctx = std::make_unique<Ctx<F>>(build(model), field, H);
    for (const auto& e : registry<F>()) {
        if (e.model != model || !ids.count(e.id)) continue;
        CheckSink sink(e.id);
        try {
            e.fn(*ctx, sink);
        } catch (const std::exception& ex) {
            sink.expect(false, std::string("exception: ") + ex.what());
        }
        out[e.id] = {sink.done(), sink.notes()};
    }
    return out;
}

}  // namespace

std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    for (const auto& e : registry<ModField>()) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CheckResult> verify_catalog(const std::string& id, int height, const Mode& mode) {
    if (height < 0) throw std::invalid_argument("negative height bound");
    if (!mode.exact && (mode.p <= (std::uint64_t{1} << 30) || !is_prime(mode.p)))
        throw std::invalid_argument("modulus must be a prime above 2^30");
    auto all = catalog_ids();
    std::set<std::string> ids;
    if (id == "all") {
        ids.insert(all.begin(), all.end());
    } else if (std::find(all.begin(), all.end(), id) != all.end()) {
        ids.insert(id);
    } else {
        throw std::invalid_argument("unknown catalog case '" + id + "'");
    }
    std::vector<std::string> models;
    for (const char* m : {"A2:2", "A4:2"}) {
        std::string prefix = std::string(m) == "A2:2" ? "a22." : "a42.";
        if (std::any_of(ids.begin(), ids.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; })) models.push_back(m);
    }

    struct Job {
        std::string model;
        std::string label;
        std::map<std::string, Outcome> result;
    };
    std::vector<Job> jobs;
    std::vector<std::uint64_t> points = mode.exact ? std::vector<std::uint64_t>{} : sample_points(mode);
    for (const auto& m : models) {
        if (mode.exact) jobs.push_back({m, "exact", {}});
        else
            for (auto t : points) jobs.push_back({m, "t=" + std::to_string(t), {}});
    }
    std::vector<std::thread> threads;
    for (size_t k = 0; k < jobs.size(); ++k) {
        threads.emplace_back([&, k] {
            Job& j = jobs[k];
            if (mode.exact) {
                j.result = run_model(j.model, ids, ExactField{}, height);
            } else {
                std::uint64_t t = points[k % points.size()];
                j.result = run_model(j.model, ids, ModField{mode.p, t}, height);
            }
        });
    }
    for (auto& t : threads) t.join();

    std::vector<CheckResult> out;
    for (const auto& cid : ids) {
        CheckResult merged;
        merged.id = cid;
        std::string fails, notes;
        int runs = 0;
        for (const auto& j : jobs) {
            auto it = j.result.find(cid);
            if (it == j.result.end()) continue;
            ++runs;
            merged.count += it->second.r.count;
            if (!it->second.r.ok) {
                merged.ok = false;
                fails += (fails.empty() ? "" : " | ") + j.label + ": " + it->second.r.detail;
            }
            if (notes.empty()) notes = it->second.notes;
        }
        if (merged.ok) {
            merged.detail = std::to_string(merged.count) + " checks";
            merged.detail += mode.exact ? " exact" : " over " + std::to_string(runs) + " points";
            if (!notes.empty()) merged.detail += "; " + notes;
        } else {
            merged.detail = fails;
        }
        out.push_back(merged);
    }
    return out;
}

}  // namespace qaffine::rank2
