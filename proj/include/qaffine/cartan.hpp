#pragma once
// Affine Cartan data for every untwisted and twisted affine type.
// Vertex 0 is the affine node; I_0 = {1..n}.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaffine {

using RootVec = std::vector<long>;

struct InvalidType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D, E, F, G };

// Which branch of the structure-constant formulas a type falls in.
enum class TwistKind { Untwisted, A2n, Twisted };

struct AffineType {
    Family family = Family::A;
    int tilde_n = 1;  // rank of the finite type X_{tilde n}
    int k = 1;        // twist order

    // Size of I_0.
    int n() const;
    TwistKind kind() const;
    std::string str() const;  // e.g. "A4:2"
    std::string pretty() const;  // e.g. "A_4^(2)"
    static AffineType parse(const std::string& s);
    void validate() const;
    friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Every type of the classification with n <= max_n (exceptional ones at fixed rank).
std::vector<AffineType> all_types(int max_n);

struct CartanDatum {
    AffineType type;
    int n = 0;
    std::vector<std::vector<int>> A;   // (n+1)x(n+1)
    std::vector<int> d;                // symmetrizers
    std::vector<int> dtilde;           // twisted degrees
    int ktilde = 1;
    std::vector<long> marks;           // delta = sum marks[i] alpha_i, marks[0] = 1
    std::vector<std::vector<long>> B;  // (alpha_i | alpha_j)

    int size() const { return n + 1; }
    TwistKind kind() const { return type.kind(); }
    RootVec simple(int i) const;
    RootVec delta() const { return marks; }
    // Finite root system Phi_0 (all of its roots, coordinates on I).
    const std::vector<RootVec>& finite_roots() const { return finite_roots_; }

    std::vector<RootVec> finite_roots_;
};

CartanDatum build(const AffineType& type);
CartanDatum build(const std::string& type);

long bilinear(const CartanDatum& D, const RootVec& v, const RootVec& w);
long height(const RootVec& v);

struct ImagLevel {
    int multiplicity = 0;
    std::vector<int> indices;  // I^m ascending
};
ImagLevel imag_mult(const CartanDatum& D, long m);

enum class RootClass { Real, Imaginary, NotARoot };
RootClass classify_root(const CartanDatum& D, const RootVec& v);

// v = m delta + alpha with alpha supported on I_0.
std::pair<long, RootVec> split_delta(const CartanDatum& D, const RootVec& v);

bool is_positive(const RootVec& v);  // nonzero with all coordinates >= 0
bool is_negative(const RootVec& v);

RootVec operator+(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a);
RootVec operator*(long s, const RootVec& a);

std::string root_str(const RootVec& v);

}  // namespace qaffine
