#pragma once
// Free-algebra model of U_q^+ for A_2^(2) and A_4^(2): words over the
// generators, the quantum Serre ideal graded by weight, the skew derivations
// r_i / r'_i, the Killing pairing against Omega-images, and a catalog of
// explicit root vectors.
//
// Scalars come from a field context: ExactField keeps everything in Q(q),
// ModField evaluates at q = t modulo a prime. Omega acts on coefficients by
// q -> q^{-1}; an element that will be paired through Omega is therefore
// built in the mirrored context (same construction, conjugated constants).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/qarith.hpp"
#include "qaffine/report.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine::rank2 {

struct UnsupportedRoot : std::domain_error {
    using std::domain_error::domain_error;
};
struct HeightLimitExceeded : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedAlgebra : std::domain_error {
    using std::domain_error::domain_error;
};

// Letters are generator indices stored as chars, so E_0 < E_1 < ... lexicographically.
using Word = std::string;

struct ExactField {
    using S = QRat;
    bool flip = false;
    S operator()(const QRat& x) const { return flip ? x.mirror() : x; }
    ExactField mirrored() const { return {!flip}; }
    std::string label() const { return flip ? "exact*" : "exact"; }
};

struct ModField {
    using S = ModScalar;
    std::uint64_t p = kDefaultPrime;
    std::uint64_t t = 2;
    S operator()(const QRat& x) const { return eval_mod(x, p, t); }
    ModField mirrored() const { return {p, ModScalar(t, p, t).inverse().value()}; }
    std::string label() const { return "mod " + std::to_string(p) + " at " + std::to_string(t); }
};

template <class S>
struct NCPoly {
    std::map<Word, S> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const S& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly scaled(const S& c) const;
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    NCPoly times(const NCPoly& b) const;
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) { return a.times(b); }
    friend NCPoly operator*(const NCPoly& a, const S& c) { return a.scaled(c); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms == b.terms; }
    // Xi: reverse every word
    NCPoly reversed() const;
    std::string str() const;
};

enum class Side { Left, Right };  // r_i or r'_i

// One graded piece of the Serre ideal, in echelon form over the words of weight eta.
template <class S>
struct Slice {
    RootVec eta;
    std::vector<Word> words;  // ascending
    std::unordered_map<Word, int> index;
    std::vector<std::vector<S>> rows;  // pivot of a row = its last nonzero column
    std::vector<int> pivot_row;        // per column, -1 if free
    std::vector<int> basis;            // free columns ascending: lexicographically least complement

    int dim() const { return static_cast<int>(basis.size()); }
    // Normal form of a dense vector; the free columns are its quotient coordinates.
    void reduce(std::vector<S>& v) const;
};

// Quotient basis of a slice: complement words and a coordinate map.
struct WeightBasis {
    RootVec eta;
    std::vector<Word> basis;
};

template <class F>
class Algebra {
public:
    using S = typename F::S;
    using Poly = NCPoly<S>;
    using KPoly = std::map<RootVec, Poly>;  // sum of poly * K_lambda, K on the right

    Algebra(CartanDatum D, F field, int max_height = 12);

    const CartanDatum& datum() const { return D_; }
    const F& field() const { return f_; }
    int max_height() const { return max_height_; }
    S c(const QRat& x) const { return f_(x); }
    S qpow(long e) const;

    Poly one() const;
    Poly constant(const QRat& x) const;
    Poly gen(int i) const;
    Poly divided(int i, long m) const;  // E_i^m / [m]_{q_i}!
    RootVec word_weight(const Word& w) const;
    RootVec weight(const Poly& x) const;  // throws if x is zero or not homogeneous

    Poly serre(int i, int j) const;
    std::vector<Poly> relators() const;

    Poly skew(int i, Side side, const Poly& x) const;
    // [x, F_i] = (r_i(x) K_i - K_i^{-1} r'_i(x)) / (q_i - q_i^{-1}), K pushed right
    KPoly bracket_f(const Poly& x, int i) const;
    // K_lambda x written as x K_lambda
    KPoly k_left(const RootVec& lambda, const Poly& x) const;
    KPoly k_right(const RootVec& lambda, const Poly& x) const;

    // (x, Omega(y)) where ybar carries the mirrored coefficients of y.
    S pair(const Poly& x, const Poly& ybar, Side peel = Side::Left) const;
    // Gram matrix of the pairing on all words of weight eta.
    const std::vector<std::vector<S>>& word_gram(const RootVec& eta);

    const Slice<S>& slice(const RootVec& eta);
    WeightBasis serre_basis(const RootVec& eta);
    std::vector<S> coordinates(const Poly& x);
    bool zero_mod(const Poly& x);
    bool equal_mod(const Poly& a, const Poly& b) { return zero_mod(a - b); }
    bool equal_mod(const KPoly& a, const KPoly& b);

    std::vector<Word> words_of(const RootVec& eta) const;

private:
    RootVec zero_weight() const { return RootVec(static_cast<size_t>(D_.size()), 0); }
    std::vector<S> dense(const Poly& x, const Slice<S>& s) const;
    S pair_rec(const Poly& z, const std::vector<std::pair<Word, S>>& ys, size_t lo, size_t hi, size_t depth, Side peel) const;

    CartanDatum D_;
    F f_;
    int max_height_;
    std::vector<S> inv_c_;  // 1 / (q_i^{-1} - q_i)
    mutable std::map<long, S> qpow_;
    std::map<RootVec, Slice<S>> slices_;
    std::map<RootVec, std::vector<std::vector<S>>> grams_;
};

// Explicit root vectors. A_2^(2): alpha_0, alpha_1, m delta +- alpha_1,
// delta + 2 alpha_1, the tilde and log imaginary vectors. A_4^(2): alpha_i,
// delta - 2 alpha_1 (ladder) and delta - alpha_1.
template <class F>
class RootVectors {
public:
    using S = typename F::S;
    using Poly = NCPoly<S>;

    explicit RootVectors(const Algebra<F>& A);

    // m delta - alpha_1, m >= 1
    const Poly& minus(long m);
    // m delta + alpha_1, m >= 0
    const Poly& plus(long m);
    // delta + 2 alpha_1, as T_1^{-1}(E_0)
    const Poly& plus2();
    // the closed expression for delta + alpha_1
    Poly plus_closed() const;
    // tilde E_{m delta}; m = 0 gives -1/(q - q^{-1}), m < 0 gives 0
    const Poly& tilde(long m);
    Poly tilde_closed() const;
    // E_{m delta} from the logarithm of the tilde series
    const Poly& imag(long m);
    // A_4^(2)
    const Poly& ladder_x1();
    const Poly& a4_minus();
    // T_i^{-1}(E_j) for i != j, from the braid formula reversed by Xi
    Poly t_inverse(int i, int j) const;

    // PBW root vector of a symbol (A_2^(2) only); throws UnsupportedRoot.
    Poly root_vector(const RootSymbol& s);
    Poly pbw_element(const std::vector<RootSymbol>& gamma);

private:
    const Algebra<F>& A_;
    bool a2_;
    IotaTable T_;
    std::map<std::string, Poly> cache_;
};

// Number of multisets of positive roots (imaginary ones with multiplicity) summing to eta.
long partition_count(const CartanDatum& D, const RootVec& eta);

struct Mode {
    bool exact = false;
    std::uint64_t p = kDefaultPrime;
    std::uint64_t seed = 1;
    int points = 3;
};

// Evaluation points drawn from the seed.
std::vector<std::uint64_t> sample_points(const Mode& mode);

std::vector<std::string> catalog_ids();
// "all" or one id; one merged record per case (over all points in modular mode).
std::vector<CheckResult> verify_catalog(const std::string& id, int height, const Mode& mode);

}  // namespace qaffine::rank2
