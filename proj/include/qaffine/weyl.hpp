#pragma once
// Extended affine Weyl group acting on the root lattice, reduced words for the
// translations lambda_i, the iota sequence, real root enumeration and the convex order.

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/qarith.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

struct NonIntegralPairing : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotReduced : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInExtendedWeyl : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of Q_{0,R} in the alpha_1..alpha_n basis; slot 0 is always zero.
struct WeightVec {
    std::vector<Rational> c;
};

WeightVec fundamental_coweight(const CartanDatum& D, int i);  // (w_i | alpha_j) = delta_ij
WeightVec lambda_weight(const CartanDatum& D, int i);         // dtilde_i * coweight
WeightVec omega_weight(const CartanDatum& D, int i);          // d_i * coweight
Rational pairing(const CartanDatum& D, const WeightVec& x, const RootVec& v);
WeightVec operator*(long s, const WeightVec& x);
WeightVec operator+(const WeightVec& x, const WeightVec& y);

// Lattice automorphism; column j of the matrix is the image of alpha_j.
class QAut {
public:
    using Mat = std::vector<std::vector<long>>;

    QAut() = default;
    explicit QAut(Mat m) : m_(std::move(m)) {}
    static QAut identity(int size);
    static QAut reflection(const CartanDatum& D, int i);
    static QAut translation(const CartanDatum& D, const WeightVec& x);
    static QAut diagram(const std::vector<int>& perm);  // alpha_i -> alpha_{perm[i]}
    // s_{w[0]} s_{w[1]} ... as a product (leftmost acts last)
    static QAut word(const CartanDatum& D, const std::vector<int>& w);

    int size() const { return static_cast<int>(m_.size()); }
    const Mat& matrix() const { return m_; }
    RootVec operator()(const RootVec& v) const;
    friend QAut operator*(const QAut& a, const QAut& b);  // a after b
    friend bool operator==(const QAut& a, const QAut& b) { return a.m_ == b.m_; }
    QAut inverse() const;
    QAut pow(long e) const;

    bool preserves_form(const CartanDatum& D) const;
    bool fixes_delta(const CartanDatum& D) const;
    // permutation of I if the element maps simple roots to simple roots, else empty
    std::vector<int> permutation() const;

private:
    Mat m_;
};

RootVec reflect(const CartanDatum& D, int i, const RootVec& v);
RootVec translate(const CartanDatum& D, const WeightVec& x, const RootVec& v);

// {s_{w1}...s_{w(k-1)}(alpha_{wk})}; throws NotReduced.
std::vector<RootVec> inversion_list(const CartanDatum& D, const std::vector<int>& word);
std::set<RootVec> inversion_set(const CartanDatum& D, const std::vector<int>& word);

// Phi_+(g) = {a > 0 : g^{-1}(a) < 0}, enumerated with an exact bound.
std::set<RootVec> positive_inversions(const CartanDatum& D, const QAut& g);
long length(const CartanDatum& D, const QAut& g);
bool length_additive(const CartanDatum& D, const QAut& g, const QAut& h);

// Positive real roots m*delta + a with 0 <= m <= max_m.
std::vector<RootVec> positive_real_roots(const CartanDatum& D, long max_m);

struct IotaTable {
    long N = 0;
    std::vector<int> word;               // iota_1..iota_N
    std::vector<long> bounds;            // N_0 = 0 < N_1 < ... < N_n = N
    std::vector<int> tau;                // permutation of I with lambda_1...lambda_n = s_word tau
    std::vector<std::vector<int>> tau_i;  // residual diagram automorphism of each lambda_i
    int iota(long r) const;
};

IotaTable iota_table(const CartanDatum& D);

// beta_r = w_r(alpha_{iota_r})
RootVec beta(const CartanDatum& D, const IotaTable& T, long r);
// beta_r for r in [lo, hi], incrementally.
std::map<long, RootVec> beta_range(const CartanDatum& D, const IotaTable& T, long lo, long hi);

struct RootSymbol {
    bool real = true;
    long r = 0;  // real: index of beta_r
    long m = 0;  // imaginary: (m delta, i)
    int i = 0;

    static RootSymbol Real(long r) { return {true, r, 0, 0}; }
    static RootSymbol Imag(long m, int i) { return {false, 0, m, i}; }
    std::string code() const;  // "R<r>" or "I<m>.<i>"
    static RootSymbol parse(const std::string& code);
    friend bool operator==(const RootSymbol&, const RootSymbol&) = default;
};

// Convex order: beta_0 < beta_-1 < ... < imaginary < ... < beta_2 < beta_1.
std::strong_ordering convex_compare(const RootSymbol& a, const RootSymbol& b);
inline bool convex_less(const RootSymbol& a, const RootSymbol& b) { return convex_compare(a, b) < 0; }

// Root of a symbol (needs beta values for real symbols).
RootVec symbol_root(const CartanDatum& D, const IotaTable& T, const RootSymbol& s);

// Integer root-lattice identities for the twisted types: the element
// w = s_0 s_n ... s_1 of A_2n^(2), the y_r elements of A_{2n-1}^(2), and the
// length/positivity conditions used for D_4^(3) and E_6^(2). n runs up to max_n.
std::vector<CheckResult> weyl_identity_suite(int max_n = 5);

}  // namespace qaffine
