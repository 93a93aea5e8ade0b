#pragma once
// Scalar matrices attached to the imaginary root spaces: structure constants
// x_{ijr}, Gram matrices H^r, determinants, y^r/z^r, the triangular A^(r),
// the diagonal pairings and the constants c_alpha. Closed-form tables for
// each of them live in the oracle part at the bottom.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/qarith.hpp"
#include "qaffine/report.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

struct IndexNotInLevel : std::domain_error {
    using std::domain_error::domain_error;
};
struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};
struct SystemViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// o(i) for i in I_0; slot 0 unused.
using SignMap = std::vector<int>;
SignMap sign_map(const CartanDatum& D);

struct QMatrix {
    std::vector<int> index;  // I^r ascending
    std::vector<std::vector<QRat>> a;

    int dim() const { return static_cast<int>(index.size()); }
    QRat& at(int p, int s) { return a[static_cast<size_t>(p)][static_cast<size_t>(s)]; }
    const QRat& at(int p, int s) const { return a[static_cast<size_t>(p)][static_cast<size_t>(s)]; }
    static QMatrix zeros(const std::vector<int>& index);
    QMatrix transpose() const;
    QMatrix mirror() const;
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend bool operator==(const QMatrix& x, const QMatrix& y) { return x.index == y.index && x.a == y.a; }
    bool is_identity() const;
    bool is_diagonal() const;
};

// Fraction-free elimination over Q(q).
QRat determinant(std::vector<std::vector<QRat>> m);
QMatrix inverse(const QMatrix& m);

std::vector<int> level_index(const CartanDatum& D, long r);
// k if k | r for D_{n+1}^(2), D_4^(3), E_6^(2); 1 otherwise
int kprime(const CartanDatum& D, long r);

QRat x_coeff(const CartanDatum& D, const SignMap& o, int i, int j, long r);
QRat x_coeff(const CartanDatum& D, int i, int j, long r);
QMatrix x_matrix(const CartanDatum& D, const SignMap& o, long r);
QMatrix h_matrix(const CartanDatum& D, const SignMap& o, long r);
QMatrix h_matrix(const CartanDatum& D, long r);
QRat det_r(const CartanDatum& D, long r);
QMatrix y_matrix(const CartanDatum& D, long r);
QMatrix z_matrix(const CartanDatum& D, long r);
// Upper-triangular A^(r) from the closed-form rows; throws SystemViolation if a
// row does not solve its triangular system or has a zero diagonal.
QMatrix abar_matrix(const CartanDatum& D, long r);
QRat pairing_bar(const CartanDatum& D, long r, int i);
// pairing_bar times its table normalization factor
QRat pairing_normalized(const CartanDatum& D, long r, int i);
QRat c_alpha(const CartanDatum& D, const RootSymbol& s);

namespace table {

QRat det(const CartanDatum& D, long r);
QRat z(const CartanDatum& D, long r, int i, int j);  // i <= j
// A^(r)_{ij} for i <= j (already multiplied back by [d_j] and the sign)
QRat abar(const CartanDatum& D, long r, int i, int j);
QRat pairing(const CartanDatum& D, long r, int i);

// Table entries known to be misprinted, with the value that holds.
struct Erratum {
    std::string what;
    QRat printed;
    QRat corrected;
};
std::optional<Erratum> z_erratum(const CartanDatum& D, long r, int i, int j);
std::optional<Erratum> pairing_erratum(const CartanDatum& D, long r, int i);

}  // namespace table

// One record per property for a single type over r = 1..rmax; ids are
// "imag.<property>". Errata hits are listed in the detail of the z/pairing records.
std::vector<CheckResult> imag_checks(const CartanDatum& D, long rmax);
// Same properties folded over every type with rank parameter <= max_n.
std::vector<CheckResult> imag_suite(int max_n, long rmax);

}  // namespace qaffine
