#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qaffine/imagblock.hpp"

using namespace qaffine;

namespace {

QRat qn(long m, int s = 1) { return q_int(m, s); }
QRat qq(int e = 1) { return QRat::q(e); }

// permutation expansion, independent of the elimination code
QRat leibniz(const std::vector<std::vector<QRat>>& m) {
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    QRat total;
    do {
        int inv = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
        QRat t(inv % 2 ? -1 : 1);
        for (size_t a = 0; a < perm.size(); ++a) t *= m[a][static_cast<size_t>(perm[a])];
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("sign map") {
    CHECK(sign_map(build("A3:1")) == SignMap{0, 1, -1, 1});
    for (const auto& t : all_types(6)) {
        auto D = build(t);
        auto o = sign_map(D);
        CHECK(o[1] == 1);
        for (int i = 1; i <= D.n; ++i)
            for (int j = 1; j <= D.n; ++j)
                if (D.A[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0) CHECK(o[static_cast<size_t>(i)] * o[static_cast<size_t>(j)] == -1);
    }
}

TEST_CASE("structure constants") {
    auto a2 = build("A2:2");
    CHECK(x_coeff(a2, 1, 1, 1) == qn(2) * (qq(2) + QRat(1) + qq(-2)));
    CHECK(x_coeff(a2, 1, 1, 2) == qn(4) * QRat(Rational(1, 2)) * (qq(4) - QRat(1) + qq(-4)));
    auto b3 = build("B3:1");
    for (long r = 1; r <= 4; ++r)
        for (int i = 1; i <= 3; ++i) CHECK(x_coeff(b3, i, i, r) == qn(2 * r, b3.d[static_cast<size_t>(i)]) * QRat(Rational(1, r)));
    CHECK(x_coeff(b3, 1, 3, 2).is_zero());
    auto d43 = build("D4:3");
    CHECK_THROWS_AS(x_coeff(d43, 2, 2, 1), IndexNotInLevel);
    CHECK_NOTHROW(x_coeff(d43, 2, 2, 3));
}

TEST_CASE("Gram matrices, determinants and inverses") {
    auto a2 = build("A2:2");
    auto H = h_matrix(a2, 1);
    REQUIRE(H.dim() == 1);
    CHECK(H.at(0, 0) == qn(2) * qn(3) / (qq(-1) - qq(1)));
    CHECK(y_matrix(a2, 1).at(0, 0) == (qq(-1) - qq(1)) / (qn(2) * qn(3)));
    for (long r : {1, 3, 5}) CHECK(det_r(a2, r) == qn(2, static_cast<int>(r)) * qn(3, static_cast<int>(r)));

    for (int n = 1; n <= 5; ++n) CHECK(det_r(build(AffineType{Family::A, n, 1}), 2) == qn(n + 1, 2));
    auto d43 = build("D4:3");
    CHECK(det_r(d43, 3) == qn(2, 9) / qn(2, 3));

    auto a21 = build("A2:1");
    auto y = y_matrix(a21, 1);
    CHECK(y.dim() == 2);
    CHECK((h_matrix(a21, 1).transpose() * y).is_identity());

    for (const auto& t : all_types(5)) {
        auto D = build(t);
        for (long r = 1; r <= 3; ++r) CHECK(imag_mult(D, r).multiplicity == h_matrix(D, r).dim());
    }

    // elimination against the permutation expansion on random Laurent entries
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 4;
        std::vector<std::vector<QRat>> m(static_cast<size_t>(n), std::vector<QRat>(static_cast<size_t>(n)));
        for (auto& row : m)
            for (auto& x : row) x = QRat(c(rng)) * qq(e(rng)) + QRat(c(rng)) / (qq(1) + QRat(c(rng) == 0 ? 2 : 1));
        QRat dv = determinant(m);
        CHECK(dv == leibniz(m));
        if (!dv.is_zero()) {
            QMatrix M;
            M.index.resize(static_cast<size_t>(n));
            std::iota(M.index.begin(), M.index.end(), 1);
            M.a = m;
            CHECK((M * inverse(M)).is_identity());
        }
    }
    QMatrix sing = QMatrix::zeros({1, 2});
    CHECK_THROWS_AS(inverse(sing), SingularMatrix);
}

TEST_CASE("z, A and pairing examples") {
    auto g2 = build("G2:1");
    for (long r = 1; r <= 3; ++r) {
        int s = static_cast<int>(r);
        auto z = z_matrix(g2, r);
        QRat pre = qn(2, 2 * s) / (qn(2, 6 * s) * qn(3, s));
        CHECK(z.at(0, 0) == pre * qn(6, s));
        CHECK(z.at(0, 1) * QRat(g2.dtilde[2]) == z.at(1, 0) * QRat(g2.dtilde[1]));
        CHECK(z.at(1, 1) == pre * qn(2, s));
    }
    auto d43 = build("D4:3");
    for (long r : {1, 2, 4}) CHECK(z_matrix(d43, r).at(0, 0) == QRat(1) / qn(2, static_cast<int>(r)));

    auto a2 = build("A2:2");
    for (long r = 1; r <= 4; ++r) CHECK(abar_matrix(a2, r).at(0, 0) == QRat(1));
    for (long r : {1, 3}) {
        int s = static_cast<int>(r);
        CHECK(pairing_normalized(a2, r, 1) == qn(2, s) * qn(3, s));
        CHECK(pairing_bar(a2, r, 1) == qn(2, s) * qn(3, s) * qn(r) / (QRat(r) * (qq(-1) - qq(1))));
    }
    CHECK(c_alpha(a2, RootSymbol::Imag(1, 1)) == qn(2) * qn(3));
    CHECK(c_alpha(a2, RootSymbol::Real(-4)) == QRat(1));
    CHECK(pairing_normalized(build("A4:1"), 1, 3) == qn(3));
    CHECK_THROWS_AS(pairing_bar(d43, 1, 2), IndexNotInLevel);
}

TEST_CASE("errata entries differ from the printed table") {
    auto a5 = build("A5:2");
    CHECK_FALSE(table::z_erratum(a5, 1, 1, 2).has_value());
    auto err = table::z_erratum(a5, 2, 1, 2);
    REQUIRE(err.has_value());
    CHECK(err->printed != err->corrected);
    CHECK_FALSE(table::pairing_erratum(build("D4:3"), 3, 1).has_value());
    CHECK(table::pairing_erratum(build("D4:3"), 2, 1).has_value());
}

TEST_CASE("per-type checks at small rank") {
    for (const char* t : {"A2:2", "A4:2", "A5:2", "D3:2", "E6:2", "D4:3", "G2:1", "F4:1", "C3:1"}) {
        CAPTURE(t);
        for (const auto& r : imag_checks(build(t), 4)) {
            CAPTURE(r.id);
            CAPTURE(r.detail);
            CHECK(r.ok);
        }
    }
}
