#pragma once
// Height-truncated universal R-matrix: PBW monomials over the convex order,
// the diagonal form in the rescaled imaginary basis and the mixed form with
// the y^r blocks, plus a JSON document format.

#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/qarith.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine::rmat {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct PBWMonomial {
    std::vector<RootSymbol> symbols;  // non-decreasing in the convex order
    RootVec weight;

    std::vector<std::string> codes() const;
    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.symbols == b.symbols && a.weight == b.weight; }
};

enum class Form { Ebar, Mixed };
std::string form_name(Form f);
Form parse_form(const std::string& s);

struct RTerm {
    PBWMonomial gamma;
    PBWMonomial gamma_prime;
    QRat coeff;
    friend bool operator==(const RTerm&, const RTerm&) = default;
};

struct RTruncation {
    AffineType type;
    int height = 0;
    Form form = Form::Ebar;
    std::string tail_marker = "q^{-t_inf}";
    std::vector<RTerm> terms;
    friend bool operator==(const RTruncation&, const RTruncation&) = default;
};

// All PBW monomials of weight height <= H, grouped by height then weight.
std::vector<PBWMonomial> enumerate_pbw(const CartanDatum& D, int H);

RTruncation r_truncated(const CartanDatum& D, int H, Form form);

std::string serialize(const RTruncation& t);
RTruncation deserialize(const std::string& text);

}  // namespace qaffine::rmat
