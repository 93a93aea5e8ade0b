#include <random>

#include "doctest.h"
#include "qaffine/weyl.hpp"

using namespace qaffine;

namespace {

RootVec rv(std::initializer_list<long> l) { return RootVec(l); }

}  // namespace

TEST_CASE("reflections and translations") {
    auto a2 = build("A2:2");
    CHECK(reflect(a2, 1, a2.simple(1)) == rv({0, -1}));
    CHECK(reflect(a2, 1, a2.simple(0)) == rv({1, 4}));
    CHECK(reflect(a2, 0, a2.delta()) == a2.delta());
    auto lam = lambda_weight(a2, 1);
    CHECK(translate(a2, lam, a2.simple(1)) == a2.simple(1) - a2.delta());
    CHECK(translate(a2, lam, a2.delta()) == a2.delta());

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-5, 5);
    for (const auto& t : all_types(5)) {
        auto D = build(t);
        for (int i = 1; i <= D.n; ++i) {
            auto x = lambda_weight(D, i);
            auto tx = QAut::translation(D, x);
            CHECK(tx.preserves_form(D));
            CHECK(tx.fixes_delta(D));
            CHECK(tx * tx == QAut::translation(D, 2 * x));
            RootVec v(static_cast<size_t>(D.size()));
            for (auto& e : v) e = c(rng);
            CHECK(translate(D, x, translate(D, x, v)) == translate(D, 2 * x, v));
            CHECK(tx(v) == translate(D, x, v));
        }
        for (int i = 0; i < D.size(); ++i) {
            auto s = QAut::reflection(D, i);
            CHECK(s * s == QAut::identity(D.size()));
            CHECK(s.preserves_form(D));
            for (int j = 0; j < D.size(); ++j) {
                RootVec expect = D.simple(j);
                expect[static_cast<size_t>(i)] -= D.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
                CHECK(s(D.simple(j)) == expect);
            }
        }
    }
    WeightVec half{{0, Rational(1, 4)}};
    CHECK_THROWS_AS(translate(a2, half, a2.simple(1)), NonIntegralPairing);
    CHECK_THROWS_AS(QAut::translation(a2, half), NonIntegralPairing);
}

TEST_CASE("inversion sets and lengths") {
    auto a2 = build("A2:2");
    CHECK(inversion_set(a2, {}).empty());
    CHECK(inversion_set(a2, {0, 1}) == std::set<RootVec>{rv({1, 0}), rv({1, 1})});
    CHECK_THROWS_AS(inversion_set(a2, {0, 0}), NotReduced);
    CHECK(length(a2, QAut::identity(2)) == 0);
    CHECK(length(a2, QAut::word(a2, {0, 1})) == 2);
    CHECK(length(a2, QAut::translation(a2, lambda_weight(a2, 1))) == 2);
    CHECK(length_additive(a2, QAut::word(a2, {0}), QAut::identity(2)));
    CHECK_THROWS_AS(length(a2, QAut::diagram({1, 0})), NotInExtendedWeyl);

    // length of a word equals the size of its inversion list whenever the word is reduced
    std::mt19937_64 rng(3);
    for (const auto& t : all_types(4)) {
        auto D = build(t);
        std::uniform_int_distribution<int> letter(0, D.n);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> w;
            for (int k = 0; k < 8; ++k) w.push_back(letter(rng));
            long l = length(D, QAut::word(D, w));
            CHECK(l <= 8);
            CHECK((l % 2) == 0);  // parity of the word length
            try {
                auto inv = inversion_set(D, w);
                CHECK(static_cast<long>(inv.size()) == l);
                CHECK(inv == positive_inversions(D, QAut::word(D, w)));
            } catch (const NotReduced&) {
                CHECK(l < 8);
            }
        }
    }
}

TEST_CASE("A_2n^(2) translation length") {
    for (int n = 1; n <= 5; ++n) {
        auto D = build(AffineType{Family::A, 2 * n, 2});
        CHECK(length(D, QAut::translation(D, lambda_weight(D, 1))) == n * (n + 1));
    }
}

TEST_CASE("iota tables") {
    auto a2 = build("A2:2");
    auto T = iota_table(a2);
    CHECK(T.N == 2);
    CHECK(T.word == std::vector<int>{0, 1});
    CHECK(T.iota(0) == 1);
    CHECK(T.iota(-1) == 0);
    CHECK(T.iota(5) == 0);
    CHECK(beta(a2, T, 1) == a2.simple(0));
    CHECK(beta(a2, T, 3) == rv({3, 4}));  // 3 delta - 2 alpha_1
    CHECK(beta(a2, T, 0) == a2.simple(1));

    for (int n = 1; n <= 5; ++n) {
        auto D = build(AffineType{Family::A, 2 * n, 2});
        auto Tn = iota_table(D);
        for (long r = 1; r <= n * (n + 1); ++r) CHECK((Tn.iota(r) + r) % (n + 1) == 1 % (n + 1));
    }

    for (const auto& t : all_types(5)) {
        CAPTURE(t.str());
        auto D = build(t);
        auto Ti = iota_table(D);
        long total = 0;
        for (int i = 1; i <= D.n; ++i) {
            auto lam = QAut::translation(D, lambda_weight(D, i));
            long l = length(D, lam);
            total += l;
            CHECK(Ti.bounds[static_cast<size_t>(i)] - Ti.bounds[static_cast<size_t>(i - 1)] == l);
            std::vector<int> seg(Ti.word.begin() + Ti.bounds[static_cast<size_t>(i - 1)], Ti.word.begin() + Ti.bounds[static_cast<size_t>(i)]);
            CHECK_NOTHROW(inversion_list(D, seg));
        }
        CHECK(Ti.N == total);
        CHECK_NOTHROW(inversion_list(D, Ti.word));
        for (long r = -10; r <= 10; ++r) CHECK(Ti.iota(r + Ti.N) == Ti.tau[static_cast<size_t>(Ti.iota(r))]);
        // lengths of powers add up
        QAut prod = QAut::identity(D.size());
        for (int i = 1; i <= D.n; ++i) prod = prod * QAut::translation(D, lambda_weight(D, i));
        for (long m = 1; m <= 3; ++m) CHECK(length(D, prod.pow(m)) == m * total);
    }
}

TEST_CASE("beta enumerates positive real roots") {
    const long M = 200;
    for (const auto& t : all_types(5)) {
        CAPTURE(t.str());
        auto D = build(t);
        auto T = iota_table(D);
        auto b = beta_range(D, T, -M, M);
        std::set<RootVec> seen;
        long bad = 0;
        for (const auto& [r, v] : b) {
            if (!seen.insert(v).second) ++bad;
            if (classify_root(D, v) != RootClass::Real || !is_positive(v)) ++bad;
            auto [m, a] = split_delta(D, v);
            // r >= 1: m delta - alpha with alpha in Q_0^+; r <= 0: m delta + alpha
            bool ok = r >= 1 ? (m > 0 && is_negative(a)) : (m >= 0 && is_positive(a));
            if (!ok) ++bad;
        }
        CHECK(bad == 0);
        // every positive real root of small delta-degree is hit
        long top = M / T.N;
        for (const auto& v : positive_real_roots(D, top - 1)) CHECK(seen.count(v) == 1);
    }
}

TEST_CASE("convex order") {
    using S = RootSymbol;
    CHECK(convex_less(S::Real(0), S::Real(-5)));
    CHECK(convex_less(S::Imag(2, 1), S::Imag(1, 1)));
    CHECK(convex_less(S::Imag(1, 1), S::Imag(1, 2)));
    CHECK(convex_less(S::Real(-3), S::Imag(7, 1)));
    CHECK(convex_less(S::Imag(7, 1), S::Real(4)));
    CHECK(convex_less(S::Real(4), S::Real(1)));
    CHECK(convex_compare(S::Real(2), S::Real(2)) == std::strong_ordering::equal);
    CHECK(S::parse("R-3") == S::Real(-3));
    CHECK(S::parse("I2.1") == S::Imag(2, 1));
    CHECK(S::Imag(2, 1).code() == "I2.1");
    CHECK_THROWS(S::parse("X1"));
}

TEST_CASE("convexity on sums with a real summand") {
    for (const auto& t : all_types(4)) {
        CAPTURE(t.str());
        auto D = build(t);
        auto T = iota_table(D);
        auto b = beta_range(D, T, -60, 60);
        std::map<RootVec, long> index;
        for (const auto& [r, v] : b) index[v] = r;
        std::vector<RootSymbol> syms;
        for (const auto& [r, v] : b) syms.push_back(RootSymbol::Real(r));
        for (long m = 1; m <= 3; ++m)
            for (int i : imag_mult(D, m).indices) syms.push_back(RootSymbol::Imag(m, i));
        auto root = [&](const RootSymbol& s) { return s.real ? b.at(s.r) : s.m * D.delta(); };
        long violations = 0, checked = 0;
        for (size_t x = 0; x < syms.size(); ++x)
            for (size_t y = x + 1; y < syms.size(); ++y) {
                if (!syms[x].real && !syms[y].real) continue;
                RootVec s = root(syms[x]) + root(syms[y]);
                std::vector<RootSymbol> sums;
                auto it = index.find(s);
                if (it != index.end()) sums.push_back(RootSymbol::Real(it->second));
                auto [m, a] = split_delta(D, s);
                if (std::all_of(a.begin(), a.end(), [](long c) { return c == 0; }) && m > 0 && m <= 3)
                    for (int i : imag_mult(D, m).indices) sums.push_back(RootSymbol::Imag(m, i));
                RootSymbol lo = convex_less(syms[x], syms[y]) ? syms[x] : syms[y];
                RootSymbol hi = convex_less(syms[x], syms[y]) ? syms[y] : syms[x];
                for (const auto& z : sums) {
                    ++checked;
                    if (!(convex_less(lo, z) && convex_less(z, hi))) ++violations;
                }
            }
        CHECK(checked > 0);
        CHECK(violations == 0);
    }
}

TEST_CASE("twisted-type root lattice identities") {
    for (const auto& r : weyl_identity_suite(5)) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.ok);
    }
}
