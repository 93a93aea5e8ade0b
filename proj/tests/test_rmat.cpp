#include <map>

#include "doctest.h"
#include "qaffine/rank2.hpp"
#include "qaffine/rmat.hpp"

using namespace qaffine;
using namespace qaffine::rmat;

namespace {

QRat qq(int e) { return QRat::q(e); }

const RTerm* find_term(const RTruncation& t, const RootVec& w, size_t len) {
    for (const auto& term : t.terms)
        if (term.gamma.weight == w && term.gamma.symbols.size() == len && term.gamma == term.gamma_prime) return &term;
    return nullptr;
}

}  // namespace

TEST_CASE("height zero is the unit term") {
    for (Form f : {Form::Ebar, Form::Mixed}) {
        auto t = r_truncated(build("C3:1"), 0, f);
        REQUIRE(t.terms.size() == 1);
        CHECK(t.terms[0].gamma.symbols.empty());
        CHECK(t.terms[0].coeff == QRat(1));
        CHECK(deserialize(serialize(t)) == t);
    }
    CHECK(enumerate_pbw(build("A1:1"), 0).size() == 1);
}

TEST_CASE("first order coefficient of a simple root") {
    for (const char* type : {"A2:2", "A4:2", "G2:1", "D4:3"}) {
        auto D = build(type);
        auto t = r_truncated(D, 1, Form::Ebar);
        for (int i = 0; i < D.size(); ++i) {
            INFO(type << " i=" << i);
            const RTerm* term = find_term(t, D.simple(i), 1);
            REQUIRE(term != nullptr);
            int d = D.d[static_cast<size_t>(i)];
            CHECK(term->coeff == qq(-d) - qq(d));
        }
    }
}

TEST_CASE("mixed form imaginary coefficient at delta") {
    auto D = build("A2:2");
    auto t = r_truncated(D, 3, Form::Mixed);
    const RTerm* hit = nullptr;
    for (const auto& term : t.terms)
        if (term.gamma.symbols.size() == 1 && !term.gamma.symbols[0].real) hit = &term;
    REQUIRE(hit != nullptr);
    CHECK(hit->gamma.symbols[0] == RootSymbol::Imag(1, 1));
    CHECK(hit->coeff == (qq(-1) - qq(1)) / (q_int(2) * q_int(3)));
}

TEST_CASE("PBW monomials at delta") {
    auto D = build("A2:2");
    std::vector<PBWMonomial> at;
    for (const auto& g : enumerate_pbw(D, 3))
        if (g.weight == D.delta()) at.push_back(g);
    CHECK(at.size() == 3);
    for (const auto& g : at)
        for (size_t k = 1; k < g.symbols.size(); ++k) CHECK_FALSE(convex_less(g.symbols[k], g.symbols[k - 1]));
}

TEST_CASE("PBW counts agree with the quotient dimensions") {
    auto D = build("A2:2");
    std::map<RootVec, long> count;
    for (const auto& g : enumerate_pbw(D, 8)) ++count[g.weight];
    rank2::Algebra<rank2::ModField> A(D, rank2::ModField{});
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; a + b <= 8; ++b) {
            if (a + b == 0) continue;
            RootVec eta{a, b};
            INFO(root_str(eta));
            CHECK(count[eta] == A.slice(eta).dim());
        }
}

TEST_CASE("the two forms coincide for A2:2") {
    auto D = build("A2:2");
    auto e = r_truncated(D, 9, Form::Ebar);
    auto m = r_truncated(D, 9, Form::Mixed);
    CHECK(e.terms == m.terms);
}

TEST_CASE("mixed form has off-diagonal imaginary terms when a level is wide") {
    auto D = build("A3:1");
    auto t = r_truncated(D, 4, Form::Mixed);
    bool off = false;
    for (const auto& term : t.terms) off = off || !(term.gamma == term.gamma_prime);
    CHECK(off);
    for (const auto& term : t.terms) CHECK(term.gamma.weight == term.gamma_prime.weight);
}

TEST_CASE("document round trip") {
    for (auto [type, h] : std::vector<std::pair<const char*, int>>{{"A2:2", 2}, {"D4:3", 5}, {"A3:1", 4}})
        for (Form f : {Form::Ebar, Form::Mixed}) {
            auto t = r_truncated(build(type), h, f);
            std::string doc = serialize(t);
            CHECK(deserialize(doc) == t);
            CHECK(serialize(deserialize(doc)) == doc);
        }
}

TEST_CASE("large integers survive the round trip") {
    RTruncation t;
    t.type = AffineType::parse("A2:2");
    t.height = 0;
    Rational big(Integer("123456789012345678901234567891"), Integer("2"));
    t.terms.push_back({{{}, {0, 0}}, {{}, {0, 0}}, QRat(LaurentPoly::monomial(3, big))});
    auto doc = serialize(t);
    CHECK(doc.find("\"123456789012345678901234567891\"") != std::string::npos);
    CHECK(deserialize(doc) == t);
}

TEST_CASE("malformed documents") {
    try {
        deserialize("{\n  \"header\": ,\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
    CHECK_THROWS_AS(deserialize("{\"terms\": []}"), ParseError);
    CHECK_THROWS_AS(deserialize(R"({"header": {"type": "Q9:9", "height": 1, "form": "ebar", "tail_marker": "x"}, "terms": []})"),
                    ParseError);
    CHECK_THROWS_AS(
        deserialize(R"({"header": {"type": "A2:2", "height": 1, "form": "ebar", "tail_marker": "x"}, "terms": [{"gamma": ["Z1"], "gamma_prime": [], "coeff": {"num": [], "den": [[0,1,1]]}}]})"),
        ParseError);
}
