#include <map>
#include <set>

#include "doctest.h"
#include "qaffine/cartan.hpp"

using namespace qaffine;

namespace {

// Hand tables of symmetrizers (d_0, ..., d_n) per family, written out independently of the solver.
std::vector<int> hand_symmetrizers(const AffineType& t) {
    const int n = t.n();
    std::vector<int> d(static_cast<size_t>(n + 1), 1);
    if (t.k == 1) {
        switch (t.family) {
            case Family::B:
                for (int i = 0; i <= n; ++i) d[static_cast<size_t>(i)] = i == 1 ? 1 : 2;
                break;
            case Family::C:
                d[0] = 2;
                d[1] = 2;
                break;
            case Family::F: return {2, 1, 1, 2, 2};
            case Family::G: return {3, 1, 3};
            default: break;
        }
        return d;
    }
    if (t.kind() == TwistKind::A2n) {
        if (n == 1) return {4, 1};
        d[0] = 4;
        for (int i = 2; i <= n; ++i) d[static_cast<size_t>(i)] = 2;
        return d;
    }
    if (t.k == 3) return {1, 1, 3};
    if (t.family == Family::E) return {1, 1, 1, 2, 2};
    if (t.family == Family::A) {
        d[1] = 2;
        return d;
    }
    for (int i = 2; i <= n; ++i) d[static_cast<size_t>(i)] = 2;  // D_{n+1}^(2)
    return d;
}

// Real roots by closing the simple roots under simple reflections inside a box.
std::set<RootVec> orbit_in_box(const CartanDatum& D, long box) {
    std::set<RootVec> seen;
    std::vector<RootVec> todo;
    for (int i = 0; i < D.size(); ++i) {
        for (long s : {1L, -1L}) {
            RootVec v = s * D.simple(i);
            seen.insert(v);
            todo.push_back(v);
        }
    }
    while (!todo.empty()) {
        RootVec v = todo.back();
        todo.pop_back();
        for (int i = 0; i < D.size(); ++i) {
            long c = 0;
            for (int j = 0; j < D.size(); ++j) c += D.A[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
            RootVec w = v;
            w[static_cast<size_t>(i)] -= c;
            bool inside = std::all_of(w.begin(), w.end(), [&](long x) { return x >= -box && x <= box; });
            if (inside && seen.insert(w).second) todo.push_back(w);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("type strings") {
    CHECK(AffineType::parse("A4:2").n() == 2);
    CHECK(AffineType::parse("A4:2").kind() == TwistKind::A2n);
    CHECK(AffineType::parse("A5:2").n() == 3);
    CHECK(AffineType::parse("D5:2").n() == 4);
    CHECK(AffineType::parse("E6:2").n() == 4);
    CHECK(AffineType::parse("D4:3").n() == 2);
    CHECK(AffineType::parse("E7:1").str() == "E7:1");
    CHECK_THROWS_AS(AffineType::parse("B2:1"), InvalidType);
    CHECK_THROWS_AS(AffineType::parse("A3:2"), InvalidType);
    CHECK_THROWS_AS(AffineType::parse("E9:1"), InvalidType);
    CHECK_THROWS_AS(AffineType::parse("D5:3"), InvalidType);
    CHECK_THROWS_AS(AffineType::parse("A4"), InvalidType);
    CHECK_THROWS_AS(AffineType::parse("A4:2x"), InvalidType);
}

TEST_CASE("documented data") {
    auto a2 = build("A2:2");
    CHECK(a2.A[0][1] == -1);
    CHECK(a2.A[1][0] == -4);
    CHECK(a2.d == std::vector<int>{4, 1});
    CHECK(a2.marks == std::vector<long>{1, 2});
    CHECK(bilinear(a2, a2.simple(0), a2.simple(0)) == 8);
    CHECK(bilinear(a2, a2.simple(0), a2.simple(1)) == -4);

    auto d43 = build("D4:3");
    CHECK(d43.marks == std::vector<long>{1, 2, 1});
    CHECK(d43.d == std::vector<int>{1, 1, 3});
    CHECK(d43.dtilde == std::vector<int>{1, 1, 3});
    CHECK(d43.ktilde == 3);

    auto a5 = build("A5:1");
    CHECK(a5.d == std::vector<int>(6, 1));
    CHECK(a5.marks == std::vector<long>(6, 1));
    CHECK(a5.ktilde == 1);

    CHECK(build("A4:2").dtilde == std::vector<int>{1, 1, 1});
    CHECK(build("A5:2").marks == std::vector<long>{1, 1, 2, 1});
}

TEST_CASE("every type: symmetrizers, radical, marks") {
    for (const auto& t : all_types(8)) {
        CAPTURE(t.str());
        auto D = build(t);
        CHECK(D.d == hand_symmetrizers(t));
        for (int i = 0; i < D.size(); ++i) {
            CHECK(D.d[static_cast<size_t>(i)] > 0);
            for (int j = 0; j < D.size(); ++j) CHECK(D.B[static_cast<size_t>(i)][static_cast<size_t>(j)] == D.B[static_cast<size_t>(j)][static_cast<size_t>(i)]);
            CHECK(bilinear(D, D.delta(), D.simple(i)) == 0);
        }
        CHECK(D.marks[0] == 1);
        for (size_t i = 0; i < D.d.size(); ++i) {
            int expect = (t.kind() == TwistKind::Twisted) ? D.d[i] : 1;
            CHECK(D.dtilde[i] == expect);
        }
        // finite type: the finite Gram matrix is positive definite iff every finite root has (a|a) > 0
        for (const auto& a : D.finite_roots()) CHECK(bilinear(D, a, a) > 0);
    }
}

TEST_CASE("imaginary multiplicities") {
    auto a3 = build("A3:1");
    for (long m : {1L, 2L, -5L}) CHECK(imag_mult(a3, m).multiplicity == 3);
    auto d43 = build("D4:3");
    CHECK(imag_mult(d43, 2).indices == std::vector<int>{1});
    CHECK(imag_mult(d43, 3).indices == std::vector<int>{1, 2});
    CHECK_THROWS(imag_mult(d43, 0));
    for (const auto& t : all_types(6)) {
        auto D = build(t);
        int kt = D.ktilde;
        for (long m = 1; m <= 6; ++m) {
            int expect = (m % kt == 0) ? D.n : (t.tilde_n - D.n) / (kt - 1);
            CAPTURE(t.str());
            CAPTURE(m);
            CHECK(imag_mult(D, m).multiplicity == expect);
        }
    }
}

TEST_CASE("classify_root examples") {
    auto a2 = build("A2:2");
    CHECK(classify_root(a2, RootVec{1, 4}) == RootClass::Real);  // delta + 2 alpha_1
    CHECK(classify_root(a2, RootVec{3, 6}) == RootClass::Imaginary);
    CHECK(classify_root(a2, RootVec{2, 6}) == RootClass::NotARoot);
    auto d43 = build("D4:3");
    CHECK(classify_root(d43, RootVec{1, 2, 2}) == RootClass::NotARoot);  // delta + alpha_2
    CHECK(classify_root(d43, RootVec{3, 6, 4}) == RootClass::Real);
    CHECK(classify_root(d43, RootVec{0, 0, 0}) == RootClass::NotARoot);
}

TEST_CASE("classify_root agrees with reflection orbits in a box") {
    const long box = 6;
    for (const auto& t : all_types(5)) {
        auto D = build(t);
        auto orbit = orbit_in_box(D, box);
        std::set<RootVec> imaginary;
        for (long m = -box; m <= box; ++m)
            if (m != 0) imaginary.insert(m * D.delta());
        const int sz = D.size();
        long mismatches = 0;
        RootVec v(static_cast<size_t>(sz), 0);
        // roots are positive or negative, so scanning the two orthants suffices
        for (long sign : {1L, -1L}) {
            std::vector<long> c(static_cast<size_t>(sz), 0);
            while (true) {
                for (int i = 0; i < sz; ++i) v[static_cast<size_t>(i)] = sign * c[static_cast<size_t>(i)];
                RootClass got = classify_root(D, v);
                RootClass expect = orbit.count(v)       ? RootClass::Real
                                   : imaginary.count(v) ? RootClass::Imaginary
                                                        : RootClass::NotARoot;
                if (got != expect) ++mismatches;
                int p = 0;
                while (p < sz && ++c[static_cast<size_t>(p)] > box) c[static_cast<size_t>(p++)] = 0;
                if (p == sz) break;
            }
        }
        CAPTURE(t.str());
        CHECK(mismatches == 0);
    }
}
