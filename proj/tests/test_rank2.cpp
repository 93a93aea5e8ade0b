#include <functional>
#include <random>

#include "doctest.h"
#include "qaffine/rank2.hpp"

using namespace qaffine;
using namespace qaffine::rank2;

namespace {

QRat qq(int e) { return QRat::q(e); }

// positive roots of A_2^(2) up to a height, listed by hand: m delta +- alpha_1,
// odd multiples of delta +- 2 alpha_1, and m delta once each
std::vector<RootVec> a22_roots(long h) {
    std::vector<RootVec> out;
    for (long m = 0; 3 * m <= h + 2; ++m) {
        auto add = [&](long a0, long a1) {
            if (a0 >= 0 && a1 >= 0 && a0 + a1 > 0 && a0 + a1 <= h) out.push_back({a0, a1});
        };
        add(m, 2 * m + 1);
        if (m >= 1) add(m, 2 * m - 1);
        if (m % 2 == 1) {
            add(m, 2 * m + 2);
            add(m, 2 * m - 2);
        }
        if (m >= 1) add(m, 2 * m);
    }
    return out;
}

long a22_partitions(const RootVec& eta) {
    auto roots = a22_roots(eta[0] + eta[1]);
    std::function<long(size_t, long, long)> go = [&](size_t k, long a, long b) -> long {
        if (a == 0 && b == 0) return 1;
        if (k == roots.size()) return 0;
        long total = go(k + 1, a, b);
        for (long t = 1; roots[k][0] * t <= a && roots[k][1] * t <= b; ++t) total += go(k + 1, a - roots[k][0] * t, b - roots[k][1] * t);
        return total;
    };
    return go(0, eta[0], eta[1]);
}

using XAlg = Algebra<ExactField>;

}  // namespace

TEST_CASE("quotient dimensions in low weights") {
    XAlg A(build("A2:2"), ExactField{});
    CHECK(A.serre_basis({0, 1}).basis == std::vector<Word>{Word(1, 1)});
    CHECK(A.slice({1, 2}).dim() == 3);
    CHECK(A.slice({1, 6}).dim() == a22_partitions({1, 6}));
    CHECK(A.slice({1, 5}).dim() == a22_partitions({1, 5}));
    CHECK(A.slice({0, 2}).dim() == 1);
}

TEST_CASE("quotient dimensions match a hand-listed partition count") {
    Algebra<ModField> A(build("A2:2"), ModField{});
    auto D = build("A2:2");
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; a + b <= 9; ++b) {
            if (a + b == 0) continue;
            RootVec eta{a, b};
            INFO(root_str(eta));
            long p = a22_partitions(eta);
            CHECK(A.slice(eta).dim() == p);
            CHECK(partition_count(D, eta) == p);
        }
}

TEST_CASE("tilde E_delta in words") {
    XAlg A(build("A2:2"), ExactField{});
    RootVectors<ExactField> R(A);
    NCPoly<QRat> expect;
    expect.add(Word{0, 1, 1}, QRat(1));
    expect.add(Word{1, 0, 1}, -(qq(-2) + qq(-4)));
    expect.add(Word{1, 1, 0}, qq(-6));
    CHECK(R.tilde(1) == expect);
    CHECK(R.imag(1) == R.tilde(1).scaled(QRat(-1)));
}

TEST_CASE("skew derivations on generators") {
    XAlg A(build("A2:2"), ExactField{});
    for (Side s : {Side::Left, Side::Right}) {
        CHECK(A.skew(1, s, A.gen(1)) == A.one());
        CHECK(A.skew(1, s, A.gen(0)).is_zero());
        CHECK(A.skew(0, s, A.gen(0)) == A.one());
    }
}

TEST_CASE("skew derivation product rules") {
    XAlg A(build("A4:2"), ExactField{});
    const auto& D = A.datum();
    std::mt19937 rng(5);
    auto rand_word = [&](int len) {
        Word w;
        for (int k = 0; k < len; ++k) w.push_back(static_cast<char>(rng() % 3));
        return w;
    };
    for (int trial = 0; trial < 20; ++trial) {
        NCPoly<QRat> x, y;
        x.add(rand_word(2 + trial % 3), qq(trial % 5 - 2));
        y.add(rand_word(1 + trial % 4), QRat(trial + 1));
        for (int i = 0; i < 3; ++i) {
            RootVec ai = D.simple(i);
            QRat cy = qq(static_cast<int>(bilinear(D, ai, A.weight(y))));
            QRat cx = qq(static_cast<int>(bilinear(D, ai, A.weight(x))));
            CHECK(A.skew(i, Side::Left, x * y) == x * A.skew(i, Side::Left, y) + A.skew(i, Side::Left, x) * y * cy);
            CHECK(A.skew(i, Side::Right, x * y) == A.skew(i, Side::Right, x) * y + x * A.skew(i, Side::Right, y) * cx);
        }
    }
}

TEST_CASE("pairing anchors") {
    for (const char* t : {"A2:2", "A4:2"}) {
        XAlg A(build(t), ExactField{});
        const auto& D = A.datum();
        for (int i = 0; i < D.size(); ++i)
            for (int j = 0; j < D.size(); ++j) {
                int d = D.d[static_cast<size_t>(i)];
                QRat expect = i == j ? (qq(-d) - qq(d)).inverse() : QRat(0);
                CHECK(A.pair(A.gen(i), A.gen(j)) == expect);
                CHECK(A.pair(A.gen(i), A.gen(j), Side::Right) == expect);
            }
        CHECK(A.pair(A.gen(0) * A.gen(1), A.gen(1)).is_zero());
    }
}

TEST_CASE("pairing of E_i^2 against its mirror") {
    XAlg A(build("A2:2"), ExactField{});
    auto e = A.gen(1) * A.gen(1);
    QRat inv = (qq(-1) - qq(1)).inverse();
    CHECK(A.pair(e, e) == (QRat(1) + qq(2)) * inv * inv);
}

TEST_CASE("bracket with F_1 of E_1 squared") {
    // [E_1^2, F_1] = [2] (q^{-1} K_1 - q K_1^{-1}) / (q - q^{-1}) E_1
    XAlg A(build("A2:2"), ExactField{});
    auto k = A.bracket_f(A.gen(1) * A.gen(1), 1);
    QRat h = (qq(1) - qq(-1)).inverse();
    RootVec a1 = A.datum().simple(1);
    // K_1 E_1 = q^2 E_1 K_1 and K_1^{-1} E_1 = q^{-2} E_1 K_1^{-1}
    CHECK(k.at(a1) == A.gen(1).scaled(q_int(2) * qq(-1) * qq(2) * h));
    CHECK(k.at(-a1) == A.gen(1).scaled(-q_int(2) * qq(1) * qq(-2) * h));
}

TEST_CASE("modular coordinates are the exact ones evaluated") {
    auto D = build("A2:2");
    XAlg X(D, ExactField{});
    ModField f{kDefaultPrime, 987654321};
    Algebra<ModField> M(D, f);
    RootVectors<ExactField> RX(X);
    RootVectors<ModField> RM(M);
    auto cx = X.coordinates(RX.imag(2));
    auto cm = M.coordinates(RM.imag(2));
    REQUIRE(cx.size() == cm.size());
    for (size_t k = 0; k < cx.size(); ++k) CHECK(f(cx[k]) == cm[k]);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(XAlg(build("A1:1"), ExactField{}), UnsupportedAlgebra);
    XAlg A(build("A2:2"), ExactField{}, 4);
    CHECK_THROWS_AS(A.slice({2, 3}), HeightLimitExceeded);
    RootVectors<ExactField> R(A);
    CHECK_THROWS_AS(R.root_vector(RootSymbol::Real(3)), UnsupportedRoot);
    CHECK_THROWS_AS(R.ladder_x1(), UnsupportedRoot);
    CHECK_THROWS_AS(verify_catalog("no-such-case", 4, Mode{}), std::invalid_argument);
    Mode small;
    small.p = 101;
    CHECK_THROWS_AS(verify_catalog("a22.heisenberg", 4, small), std::invalid_argument);
    Mode composite;
    composite.p = (std::uint64_t{1} << 40) + 1;
    CHECK_THROWS_AS(verify_catalog("a22.heisenberg", 4, composite), std::invalid_argument);
}

TEST_CASE("evaluation points are reproducible") {
    Mode m;
    m.seed = 7;
    auto a = sample_points(m), b = sample_points(m);
    CHECK(a == b);
    CHECK(a.size() == 3);
    for (auto t : a) CHECK((t >= 2 && t <= m.p - 2));
    m.seed = 8;
    CHECK(sample_points(m) != a);
}

TEST_CASE("catalog passes at a small height") {
    auto res = verify_catalog("all", 6, Mode{});
    CHECK(res.size() == catalog_ids().size());
    for (const auto& r : res) {
        INFO(r.id << ": " << r.detail);
        CHECK(r.ok);
    }
}

TEST_CASE("catalog exact mode on a few cases") {
    Mode m;
    m.exact = true;
    for (const char* id : {"a22.delta-minus-f1", "a22.tilde-delta-f0", "a42.x-f1-commute", "a22.canonical-element"}) {
        auto res = verify_catalog(id, 5, m);
        REQUIRE(res.size() == 1);
        INFO(res[0].detail);
        CHECK(res[0].ok);
        CHECK(res[0].count > 0);
    }
}
