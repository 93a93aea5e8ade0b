#include <algorithm>

#include "qaffine/weyl.hpp"

namespace qaffine {

namespace {

// alpha_a + ... + alpha_b with multiplicity c (empty if a > b)
RootVec span(int size, int a, int b, long c = 1) {
    RootVec v(static_cast<size_t>(size), 0);
    for (int r = a; r <= b; ++r) v[static_cast<size_t>(r)] += c;
    return v;
}

long floordiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// representative of k mod n in {1, ..., n}
int bar(long k, int n) { return static_cast<int>(((k - 1) % n + n) % n + 1); }

std::string tag(const std::string& type, const std::string& what) { return type + ": " + what; }

void a2n_checks(int max_n, std::vector<CheckResult>& out) {
    CheckSink len("weyl.a2n.translation-length");
    CheckSink first("weyl.a2n.w-on-simple-roots");
    CheckSink powers("weyl.a2n.w-powers");
    CheckSink reduced("weyl.a2n.w-power-is-translation");
    CheckSink alpha0("weyl.a2n.w-power-on-alpha0");
    CheckSink coset("weyl.a2n.coset-lengths");
    for (int n = 1; n <= max_n; ++n) {
        auto D = build(AffineType{Family::A, 2 * n, 2});
        const std::string ty = D.type.str();
        const int sz = D.size();
        RootVec delta = D.delta();
        QAut om = QAut::translation(D, omega_weight(D, 1));

        // inversion set of the first fundamental translation
        auto inv = positive_inversions(D, om);
        len.expect(static_cast<long>(inv.size()) == n * (n + 1), tag(ty, "length"));
        std::set<RootVec> listed;
        for (int k = 1; k <= n; ++k)
            for (long eps : {1L, 2L}) listed.insert(delta - span(sz, 1, k, eps));
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                for (long eps : {1L, 2L}) listed.insert(eps * delta - span(sz, 1, k, 2) - span(sz, k + 1, l));
        len.expect(listed == inv, tag(ty, "inversion set"));

        std::vector<int> wword{0};
        for (int j = n; j >= 1; --j) wword.push_back(j);
        QAut w = QAut::word(D, wword);

        if (n >= 2) {
            first.expect(w(D.simple(0)) == delta - span(sz, 1, n - 1, 2), tag(ty, "w(alpha_0)"));
            first.expect(w(D.simple(1)) == span(sz, 1, n) - delta, tag(ty, "w(alpha_1)"));
            first.expect(w(D.simple(2)) == delta - span(sz, 2, n), tag(ty, "w(alpha_2)"));
            for (int i = 3; i <= n; ++i) first.expect(w(D.simple(i)) == D.simple(i - 1), tag(ty, "w(alpha_i)"));
        }

        for (long k = -2L * n; k <= 2L * n; ++k) {
            QAut wk = w.pow(k);
            RootVec e0 = (1 + 2 * floordiv(k, n)) * delta - span(sz, 1, bar(n - k, n), 2);
            powers.expect(wk(D.simple(0)) == e0, tag(ty, "w^" + std::to_string(k) + "(alpha_0)"));
            RootVec e1 = floordiv(-k, n) * delta + span(sz, 1, n + 1 - bar(k, n));
            powers.expect(wk(D.simple(1)) == e1, tag(ty, "w^" + std::to_string(k) + "(alpha_1)"));
            for (int i = 2; i <= n; ++i) {
                int b = bar(i - k, n);
                RootVec ei = b != 1 ? D.simple(b) : delta - span(sz, 2, n);
                powers.expect(wk(D.simple(i)) == ei, tag(ty, "w^" + std::to_string(k) + "(alpha_i)"));
            }
        }

        std::vector<int> wn;
        for (int rep = 0; rep < n; ++rep) wn.insert(wn.end(), wword.begin(), wword.end());
        reduced.expect(w.pow(n) == om, tag(ty, "w^n is the translation"));
        bool is_reduced = true;
        try {
            is_reduced = static_cast<long>(inversion_list(D, wn).size()) == n * (n + 1);
        } catch (const NotReduced&) {
            is_reduced = false;
        }
        reduced.expect(is_reduced, tag(ty, "(s_0 s_n ... s_1)^n reduced"));

        alpha0.expect(w.pow(n - 1)(D.simple(0)) == delta - 2 * D.simple(1), tag(ty, "w^(n-1)(alpha_0)"));

        QAut s0 = QAut::reflection(D, 0), s1 = QAut::reflection(D, 1);
        QAut a = s0 * w * s1;
        coset.expect(length(D, a * om) == length(D, a) + length(D, om), tag(ty, "first additivity"));
        coset.expect(length_additive(D, a, om), tag(ty, "first additivity by inclusion"));
        QAut b = s1 * w.inverse() * s0 * w * s1 * om;
        coset.expect(length(D, a * om) == length(D, w * s1) + length(D, b), tag(ty, "second additivity"));
        coset.expect(length_additive(D, w * s1, b), tag(ty, "second additivity by inclusion"));
        coset.expect((a * w.pow(n - 1))(D.simple(0)) == D.simple(0), tag(ty, "alpha_0 fixed"));
        coset.expect((b * s1)(D.simple(1)) == D.simple(1), tag(ty, "alpha_1 fixed"));
    }
    for (auto* s : {&len, &first, &powers, &reduced, &alpha0, &coset}) out.push_back(s->done());
}

void a2n1_checks(int max_n, std::vector<CheckResult>& out) {
    CheckSink ya("weyl.a2n-1.y-on-simple-roots");
    CheckSink yb("weyl.a2n-1.y-inversions");
    CheckSink yc("weyl.a2n-1.y-products");
    CheckSink yd("weyl.a2n-1.y-products-shifted");
    CheckSink prop("weyl.a2n-1.descent-conditions");
    for (int n = 3; n <= max_n; ++n) {
        auto D = build(AffineType{Family::A, 2 * n - 1, 2});
        const std::string ty = D.type.str();
        const int sz = D.size();
        RootVec delta = D.delta();
        std::vector<int> tau(static_cast<size_t>(sz));
        for (int t = 0; t < sz; ++t) tau[static_cast<size_t>(t)] = t;
        tau[static_cast<size_t>(n)] = 0;
        tau[0] = n;
        QAut T = QAut::diagram(tau);
        auto y = [&](int r) {
            std::vector<int> wd;
            for (int j = n; j >= r; --j) wd.push_back(j);
            return T * QAut::word(D, wd);
        };
        // y_{a} y_{a+1} ... y_{b}, identity if a > b
        auto yprod = [&](int a, int b) {
            QAut g = QAut::identity(sz);
            for (int r = a; r <= b; ++r) g = g * y(r);
            return g;
        };
        auto tail = [&](int i) {  // tau(alpha_i + ... + alpha_n)
            return T(span(sz, i, n));
        };

        for (int s = 1; s <= n - 1; ++s)
            for (int r = s; r <= n - 1; ++r) {
                QAut g = yprod(s + 1, r);
                for (int i = r + 1; i <= n; ++i) ya.expect(g(D.simple(i)) == D.simple(i - r + s), tag(ty, "y on alpha_i"));
                RootVec e0 = D.simple(0);
                for (int t = 1; t <= r - s; ++t) e0 = e0 + D.simple(n - t) + D.simple(n - t + 1);
                ya.expect(g(D.simple(0)) == e0, tag(ty, "y on alpha_0"));
            }

        for (int r = 2; r <= n; ++r) {
            std::set<RootVec> expect;
            for (int i = r; i <= n; ++i) expect.insert(tail(i));
            yb.expect(positive_inversions(D, y(r)) == expect, tag(ty, "inversions of y_" + std::to_string(r)));
        }

        QAut om2 = QAut::translation(D, omega_weight(D, 2));
        QAut s1 = QAut::reflection(D, 1), s2 = QAut::reflection(D, 2);
        QAut shift = s2 * om2.inverse() * s1 * s2;
        for (int r = 1; r <= n; ++r)
            for (int i = r + 1; i <= n; ++i) {
                QAut g = yprod(2, r);
                int j = i - r, top = n - r + 1;
                RootVec c = delta - (D.simple(1) + span(sz, 2, j, 2) + span(sz, j + 1, top));
                RootVec got = g(tail(i));
                yc.expect(got == c, tag(ty, "product image r=" + std::to_string(r) + " i=" + std::to_string(i)));
                RootVec d;
                if (j == 1 && n - r == 1) d = D.simple(2);
                else if (j == 1) d = -1 * delta - span(sz, 1, top);
                else if (j == 2) d = -1 * span(sz, 3, top);
                else d = -1 * delta - (D.simple(1) + span(sz, 2, j, 2) + span(sz, j + 1, top));
                yd.expect(shift(got) == d, tag(ty, "shifted image r=" + std::to_string(r) + " i=" + std::to_string(i)));
            }

        QAut target = s2 * s1 * om2 * s2;
        QAut Y = yprod(2, n - 1);
        prop.expect(length(D, Y.inverse() * target) == length(D, target) - length(D, Y), tag(ty, "length drop"));
        prop.expect((Y.inverse() * target)(D.simple(2)) == D.simple(0), tag(ty, "simple image"));
        prop.expect(is_positive(Y.inverse()(D.simple(2))), tag(ty, "positivity"));
        for (int r = 2; r <= n - 1; ++r) {
            auto big = positive_inversions(D, yprod(2, r - 1).inverse() * target);
            auto small = positive_inversions(D, y(r));
            prop.expect(std::includes(big.begin(), big.end(), small.begin(), small.end()),
                        tag(ty, "prefix inclusion r=" + std::to_string(r)));
        }
    }
    for (auto* s : {&ya, &yb, &yc, &yd, &prop}) out.push_back(s->done());
}

void d43_checks(std::vector<CheckResult>& out) {
    CheckSink c("weyl.d43.descent-conditions");
    auto D = build("D4:3");
    const std::string ty = D.type.str();
    RootVec delta = D.delta();
    QAut om1 = QAut::translation(D, omega_weight(D, 1));
    QAut s0 = QAut::reflection(D, 0), s1 = QAut::reflection(D, 1), s2 = QAut::reflection(D, 2);
    c.expect((s1 * s2 * om1 * s1)(D.simple(1)) == D.simple(0), tag(ty, "degree one simple image"));
    QAut g = s1 * s2 * om1.pow(2) * s1;
    QAut h = s1 * om1.pow(-2) * s2 * s1;
    c.expect(h == g.inverse(), tag(ty, "inverse"));
    c.expect(h(D.simple(0)) == D.simple(1) - delta, tag(ty, "first root"));
    c.expect(h(D.simple(0) + D.simple(1)) == -3 * delta - (D.simple(1) + D.simple(2)), tag(ty, "second root"));
    c.expect(h(RootVec{3, 3, 1}) == -3 * delta - D.simple(2), tag(ty, "third root"));
    QAut p = s0 * s1 * s2;
    auto inv = positive_inversions(D, p);
    c.expect(inv == std::set<RootVec>{D.simple(0), D.simple(0) + D.simple(1), RootVec{3, 3, 1}}, tag(ty, "prefix inversions"));
    c.expect(length(D, p.inverse() * g) == length(D, g) - 3, tag(ty, "length drop"));
    c.expect((p.inverse() * g)(D.simple(1)) == D.simple(1), tag(ty, "simple image"));
    c.expect(p.inverse()(D.simple(1)) == D.simple(0), tag(ty, "positivity"));
    out.push_back(c.done());
}

void e62_checks(std::vector<CheckResult>& out) {
    CheckSink c("weyl.e62.descent-conditions");
    auto D = build("E6:2");
    const std::string ty = D.type.str();
    QAut om2 = QAut::translation(D, omega_weight(D, 2));
    QAut s2 = QAut::reflection(D, 2), s3 = QAut::reflection(D, 3);
    QAut w = QAut::word(D, {0, 1, 2, 3, 4, 2, 3, 2, 1, 0, 2, 3, 2, 1, 2, 3});
    QAut g = s2 * s3 * om2 * s2;
    c.expect(length(D, w) == 16, tag(ty, "word is reduced"));
    c.expect(length(D, w.inverse() * g) == length(D, g) - length(D, w), tag(ty, "length drop"));
    RootVec img = (w.inverse() * g)(D.simple(2));
    c.expect(img == D.simple(2), tag(ty, "simple image"));
    c.expect(g(D.simple(2)) == w(D.simple(2)), tag(ty, "images agree"));
    c.expect(w.inverse()(D.simple(2)) == D.simple(0), tag(ty, "positivity"));
    out.push_back(c.done());
}

}  // namespace

std::vector<CheckResult> weyl_identity_suite(int max_n) {
    std::vector<CheckResult> out;
    a2n_checks(max_n, out);
    a2n1_checks(max_n, out);
    d43_checks(out);
    e62_checks(out);
    return out;
}

}  // namespace qaffine
