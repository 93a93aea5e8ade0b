#include "qaffine/rank2.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qaffine::rank2 {

// ---------------- NCPoly ----------------

template <class S>
void NCPoly<S>::add(const Word& w, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

template <class S>
NCPoly<S>& NCPoly<S>::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

template <class S>
NCPoly<S>& NCPoly<S>::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

template <class S>
NCPoly<S> NCPoly<S>::scaled(const S& c) const {
    NCPoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, x] : terms) out.add(w, x * c);
    return out;
}

template <class S>
NCPoly<S> NCPoly<S>::times(const NCPoly& b) const {
    NCPoly out;
    for (const auto& [u, x] : terms)
        for (const auto& [v, y] : b.terms) out.add(u + v, x * y);
    return out;
}

template <class S>
NCPoly<S> NCPoly<S>::reversed() const {
    NCPoly out;
    for (const auto& [w, c] : terms) out.add(Word(w.rbegin(), w.rend()), c);
    return out;
}

template <class S>
std::string NCPoly<S>::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (char l : w) s += "E" + std::to_string(static_cast<int>(l));
    }
    return s;
}

template struct NCPoly<QRat>;
template struct NCPoly<ModScalar>;

// ---------------- Slice ----------------

template <class S>
void Slice<S>::reduce(std::vector<S>& v) const {
    for (int c = static_cast<int>(v.size()) - 1; c >= 0; --c) {
        auto uc = static_cast<size_t>(c);
        if (v[uc].is_zero() || pivot_row[uc] < 0) continue;
        const auto& row = rows[static_cast<size_t>(pivot_row[uc])];
        S f = v[uc];
        for (size_t k = 0; k <= uc; ++k)
            if (!row[k].is_zero()) v[k] -= f * row[k];
    }
}

template struct Slice<QRat>;
template struct Slice<ModScalar>;

// ---------------- Algebra ----------------

namespace {

bool is_model(const CartanDatum& D) {
    auto s = D.type.str();
    return s == "A2:2" || s == "A4:2";
}

// all words with the given letter counts, ascending
void gen_words(RootVec& left, Word& cur, size_t total, std::vector<Word>& out) {
    if (cur.size() == total) {
        out.push_back(cur);
        return;
    }
    for (size_t i = 0; i < left.size(); ++i) {
        if (left[i] == 0) continue;
        --left[i];
        cur.push_back(static_cast<char>(i));
        gen_words(left, cur, total, out);
        cur.pop_back();
        ++left[i];
    }
}

}  // namespace

template <class F>
Algebra<F>::Algebra(CartanDatum D, F field, int max_height) : D_(std::move(D)), f_(field), max_height_(max_height) {
    if (!is_model(D_)) throw UnsupportedAlgebra("free-algebra model only covers A2:2 and A4:2, got " + D_.type.str());
    for (int i = 0; i < D_.size(); ++i) {
        int d = D_.d[static_cast<size_t>(i)];
        inv_c_.push_back(c((QRat::q(-d) - QRat::q(d)).inverse()));
    }
}

template <class F>
typename Algebra<F>::S Algebra<F>::qpow(long e) const {
    auto it = qpow_.find(e);
    if (it != qpow_.end()) return it->second;
    S v = c(QRat::q(static_cast<int>(e)));
    qpow_.emplace(e, v);
    return v;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::one() const {
    Poly p;
    p.add("", c(QRat(1)));
    return p;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::constant(const QRat& x) const {
    Poly p;
    p.add("", c(x));
    return p;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::gen(int i) const {
    Poly p;
    p.add(Word(1, static_cast<char>(i)), c(QRat(1)));
    return p;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::divided(int i, long m) const {
    Poly p;
    p.add(Word(static_cast<size_t>(m), static_cast<char>(i)), c(q_factorial(m, D_.d[static_cast<size_t>(i)]).inverse()));
    return p;
}

template <class F>
RootVec Algebra<F>::word_weight(const Word& w) const {
    RootVec v = zero_weight();
    for (char l : w) ++v[static_cast<size_t>(l)];
    return v;
}

template <class F>
RootVec Algebra<F>::weight(const Poly& x) const {
    if (x.is_zero()) throw std::invalid_argument("weight of the zero element");
    RootVec v = word_weight(x.terms.begin()->first);
    for (const auto& [w, c] : x.terms)
        if (word_weight(w) != v) throw std::invalid_argument("element is not homogeneous");
    return v;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::serre(int i, int j) const {
    long n = 1 - D_.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
    int di = D_.d[static_cast<size_t>(i)];
    Poly out;
    for (long r = 0; r <= n; ++r) {
        Word w(static_cast<size_t>(r), static_cast<char>(i));
        w.push_back(static_cast<char>(j));
        w.append(static_cast<size_t>(n - r), static_cast<char>(i));
        QRat coef = q_binom(n, r, di);
        out.add(w, c(r % 2 ? -coef : coef));
    }
    return out;
}

template <class F>
std::vector<typename Algebra<F>::Poly> Algebra<F>::relators() const {
    std::vector<Poly> out;
    for (int i = 0; i < D_.size(); ++i)
        for (int j = 0; j < D_.size(); ++j)
            if (i != j) out.push_back(serre(i, j));
    return out;
}

template <class F>
typename Algebra<F>::Poly Algebra<F>::skew(int i, Side side, const Poly& x) const {
    Poly out;
    const auto& Bi = D_.B[static_cast<size_t>(i)];
    for (const auto& [w, coef] : x.terms) {
        long e = 0;  // (alpha_i | weight of the letters already passed)
        if (side == Side::Left) {
            for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
                auto up = static_cast<size_t>(p);
                if (w[up] == static_cast<char>(i)) out.add(w.substr(0, up) + w.substr(up + 1), coef * qpow(e));
                e += Bi[static_cast<size_t>(w[up])];
            }
        } else {
            for (size_t p = 0; p < w.size(); ++p) {
                if (w[p] == static_cast<char>(i)) out.add(w.substr(0, p) + w.substr(p + 1), coef * qpow(e));
                e += Bi[static_cast<size_t>(w[p])];
            }
        }
    }
    return out;
}

template <class F>
typename Algebra<F>::KPoly Algebra<F>::bracket_f(const Poly& x, int i) const {
    KPoly out;
    int d = D_.d[static_cast<size_t>(i)];
    S inv = c((QRat::q(d) - QRat::q(-d)).inverse());
    RootVec ki = D_.simple(i);
    Poly left = skew(i, Side::Left, x);
    if (!left.is_zero()) out[ki] = left.scaled(inv);
    Poly right = skew(i, Side::Right, x);
    if (!right.is_zero()) {
        // K_i^{-1} y = q^{-(alpha_i | wt y)} y K_i^{-1}
        long e = -bilinear(D_, ki, weight(right));
        out[-ki] = right.scaled(-inv * qpow(e));
    }
    return out;
}

template <class F>
typename Algebra<F>::KPoly Algebra<F>::k_left(const RootVec& lambda, const Poly& x) const {
    KPoly out;
    if (x.is_zero()) return out;
    Poly acc;
    for (const auto& [w, coef] : x.terms) acc.add(w, coef * qpow(bilinear(D_, lambda, word_weight(w))));
    out[lambda] = acc;
    return out;
}

template <class F>
typename Algebra<F>::KPoly Algebra<F>::k_right(const RootVec& lambda, const Poly& x) const {
    KPoly out;
    if (!x.is_zero()) out[lambda] = x;
    return out;
}

template <class F>
typename Algebra<F>::S Algebra<F>::pair_rec(const Poly& z, const std::vector<std::pair<Word, S>>& ys, size_t lo, size_t hi,
                                            size_t depth, Side peel) const {
    S total = c(QRat(0));
    if (z.is_zero()) return total;
    if (depth == ys[lo].first.size()) {
        auto it = z.terms.find("");
        if (it == z.terms.end()) return total;
        for (size_t k = lo; k < hi; ++k) total += ys[k].second;
        return total * it->second;
    }
    size_t a = lo;
    while (a < hi) {
        char l = ys[a].first[depth];
        size_t b = a;
        while (b < hi && ys[b].first[depth] == l) ++b;
        int i = static_cast<int>(l);
        Poly next = skew(i, peel, z).scaled(inv_c_[static_cast<size_t>(i)]);
        total += pair_rec(next, ys, a, b, depth + 1, peel);
        a = b;
    }
    return total;
}

template <class F>
typename Algebra<F>::S Algebra<F>::pair(const Poly& x, const Poly& ybar, Side peel) const {
    S zero = c(QRat(0));
    if (x.is_zero() || ybar.is_zero()) return zero;
    if (weight(x) != weight(ybar)) return zero;
    std::vector<std::pair<Word, S>> ys;
    // Omega(E_{w1}...E_{wk}) = F_{wk}...F_{w1}: the rightmost F pairs against r_{w1};
    // peeling from the left end of the F-word uses r'_{wk}.
    for (const auto& [w, coef] : ybar.terms) ys.emplace_back(peel == Side::Left ? w : Word(w.rbegin(), w.rend()), coef);
    std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return pair_rec(x, ys, 0, ys.size(), 0, peel);
}

template <class F>
std::vector<Word> Algebra<F>::words_of(const RootVec& eta) const {
    RootVec left = eta;
    Word cur;
    std::vector<Word> out;
    gen_words(left, cur, static_cast<size_t>(height(eta)), out);
    return out;
}

template <class F>
const std::vector<std::vector<typename Algebra<F>::S>>& Algebra<F>::word_gram(const RootVec& eta) {
    auto it = grams_.find(eta);
    if (it != grams_.end()) return it->second;
    auto words = words_of(eta);
    std::vector<std::vector<S>> G(words.size(), std::vector<S>(words.size(), c(QRat(0))));
    if (height(eta) == 0) {
        G[0][0] = c(QRat(1));
        return grams_.emplace(eta, std::move(G)).first->second;
    }
    std::map<int, std::pair<std::vector<Word>, std::unordered_map<Word, int>>> lower;
    for (int i = 0; i < D_.size(); ++i) {
        if (eta[static_cast<size_t>(i)] == 0) continue;
        RootVec e = eta;
        --e[static_cast<size_t>(i)];
        word_gram(e);
        auto lw = words_of(e);
        std::unordered_map<Word, int> idx;
        for (size_t k = 0; k < lw.size(); ++k) idx[lw[k]] = static_cast<int>(k);
        lower[i] = {lw, idx};
    }
    for (size_t col = 0; col < words.size(); ++col) {
        const Word& w = words[col];
        int i = static_cast<int>(w[0]);
        RootVec e = eta;
        --e[static_cast<size_t>(i)];
        const auto& Gl = grams_.at(e);
        const auto& idx = lower[i].second;
        int tail = idx.at(w.substr(1));
        const auto& Bi = D_.B[static_cast<size_t>(i)];
        for (size_t row = 0; row < words.size(); ++row) {
            const Word& u = words[row];
            S acc = c(QRat(0));
            long ex = 0;
            for (int p = static_cast<int>(u.size()) - 1; p >= 0; --p) {
                auto up = static_cast<size_t>(p);
                if (u[up] == w[0]) {
                    const S& g = Gl[static_cast<size_t>(idx.at(u.substr(0, up) + u.substr(up + 1)))][static_cast<size_t>(tail)];
                    if (!g.is_zero()) acc += g * qpow(ex);
                }
                ex += Bi[static_cast<size_t>(u[up])];
            }
            G[row][col] = acc * inv_c_[static_cast<size_t>(i)];
        }
    }
    return grams_.emplace(eta, std::move(G)).first->second;
}

template <class F>
const Slice<typename Algebra<F>::S>& Algebra<F>::slice(const RootVec& eta) {
    auto it = slices_.find(eta);
    if (it != slices_.end()) return it->second;
    if (height(eta) > max_height_)
        throw HeightLimitExceeded("weight " + root_str(eta) + " above height bound " + std::to_string(max_height_));
    for (long x : eta)
        if (x < 0) throw std::invalid_argument("negative weight " + root_str(eta));

    Slice<S> s;
    s.eta = eta;
    s.words = words_of(eta);
    for (size_t k = 0; k < s.words.size(); ++k) s.index[s.words[k]] = static_cast<int>(k);
    size_t N = s.words.size();
    s.pivot_row.assign(N, -1);
    S zero = c(QRat(0));

    auto insert = [&](std::vector<S> v) {
        s.reduce(v);
        int piv = -1;
        for (int k = static_cast<int>(N) - 1; k >= 0; --k)
            if (!v[static_cast<size_t>(k)].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) return;
        S inv = c(QRat(1)) / v[static_cast<size_t>(piv)];
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
        s.pivot_row[static_cast<size_t>(piv)] = static_cast<int>(s.rows.size());
        s.rows.push_back(std::move(v));
    };

    for (int i = 0; i < D_.size(); ++i) {
        if (eta[static_cast<size_t>(i)] == 0) continue;
        RootVec e = eta;
        --e[static_cast<size_t>(i)];
        const auto& low = slice(e);
        char l = static_cast<char>(i);
        std::vector<int> lmap, rmap;
        for (const auto& w : low.words) {
            lmap.push_back(s.index.at(l + w));
            rmap.push_back(s.index.at(w + l));
        }
        for (const auto& row : low.rows) {
            if (s.rows.size() == N) break;
            std::vector<S> a(N, zero), b(N, zero);
            for (size_t k = 0; k < row.size(); ++k) {
                if (row[k].is_zero()) continue;
                a[static_cast<size_t>(lmap[k])] = row[k];
                b[static_cast<size_t>(rmap[k])] = row[k];
            }
            insert(std::move(a));
            insert(std::move(b));
        }
    }
    for (const auto& rel : relators()) {
        if (word_weight(rel.terms.begin()->first) != eta) continue;
        std::vector<S> v(N, zero);
        for (const auto& [w, coef] : rel.terms) v[static_cast<size_t>(s.index.at(w))] = coef;
        insert(std::move(v));
    }
    for (size_t k = 0; k < N; ++k)
        if (s.pivot_row[k] < 0) s.basis.push_back(static_cast<int>(k));
    return slices_.emplace(eta, std::move(s)).first->second;
}

template <class F>
WeightBasis Algebra<F>::serre_basis(const RootVec& eta) {
    const auto& s = slice(eta);
    WeightBasis b{eta, {}};
    for (int k : s.basis) b.basis.push_back(s.words[static_cast<size_t>(k)]);
    return b;
}

template <class F>
std::vector<typename Algebra<F>::S> Algebra<F>::dense(const Poly& x, const Slice<S>& s) const {
    std::vector<S> v(s.words.size(), c(QRat(0)));
    for (const auto& [w, coef] : x.terms) v[static_cast<size_t>(s.index.at(w))] = coef;
    return v;
}

template <class F>
std::vector<typename Algebra<F>::S> Algebra<F>::coordinates(const Poly& x) {
    const auto& s = slice(weight(x));
    auto v = dense(x, s);
    s.reduce(v);
    std::vector<S> out;
    for (int k : s.basis) out.push_back(v[static_cast<size_t>(k)]);
    return out;
}

template <class F>
bool Algebra<F>::zero_mod(const Poly& x) {
    std::map<RootVec, Poly> parts;
    for (const auto& [w, coef] : x.terms) parts[word_weight(w)].add(w, coef);
    for (const auto& [eta, part] : parts) {
        const auto& s = slice(eta);
        auto v = dense(part, s);
        s.reduce(v);
        for (const auto& e : v)
            if (!e.is_zero()) return false;
    }
    return true;
}

template <class F>
bool Algebra<F>::equal_mod(const KPoly& a, const KPoly& b) {
    std::set<RootVec> tags;
    for (const auto& [k, v] : a) tags.insert(k);
    for (const auto& [k, v] : b) tags.insert(k);
    for (const auto& k : tags) {
        Poly x = a.count(k) ? a.at(k) : Poly{};
        Poly y = b.count(k) ? b.at(k) : Poly{};
        if (!zero_mod(x - y)) return false;
    }
    return true;
}

template class Algebra<ExactField>;
template class Algebra<ModField>;

// ---------------- root vectors ----------------

template <class F>
RootVectors<F>::RootVectors(const Algebra<F>& A) : A_(A), a2_(A.datum().type.str() == "A2:2") {
    if (a2_) T_ = iota_table(A.datum());
}

namespace {

QRat qq(int e) { return QRat::q(e); }

}  // namespace

template <class F>
typename RootVectors<F>::Poly RootVectors<F>::t_inverse(int i, int j) const {
    const auto& D = A_.datum();
    long a = D.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
    int di = D.d[static_cast<size_t>(i)];
    Poly out;
    for (long r = 0; r <= -a; ++r) {
        QRat coef = ((r - a) % 2 ? QRat(-1) : QRat(1)) * qq(static_cast<int>(-di * r));
        out += A_.divided(i, r) * A_.gen(j) * A_.divided(i, -a - r) * A_.c(coef);
    }
    return out;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::minus(long m) {
    if (!a2_) throw UnsupportedRoot("m delta - alpha_1 is only built for A2:2");
    if (m < 1) throw UnsupportedRoot("m delta - alpha_1 needs m >= 1");
    std::string key = "minus" + std::to_string(m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Poly v;
    if (m == 1) {
        v = A_.gen(0) * A_.gen(1) * A_.c(QRat(-1)) + A_.gen(1) * A_.gen(0) * A_.c(qq(-4));
    } else {
        Poly prev = minus(m - 1);
        const Poly& t = tilde(1);
        v = (t * prev - prev * t) * A_.c(q_factorial(3).inverse());
    }
    return cache_.emplace(key, std::move(v)).first->second;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::plus(long m) {
    if (!a2_) throw UnsupportedRoot("m delta + alpha_1 is only built for A2:2");
    if (m < 0) throw UnsupportedRoot("m delta + alpha_1 needs m >= 0");
    std::string key = "plus" + std::to_string(m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Poly v;
    if (m == 0) {
        v = A_.gen(1);
    } else {
        Poly prev = plus(m - 1);
        const Poly& t = tilde(1);
        v = (t * prev - prev * t) * A_.c(-q_factorial(3).inverse());
    }
    return cache_.emplace(key, std::move(v)).first->second;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::plus2() {
    if (!a2_) throw UnsupportedRoot("delta + 2 alpha_1 is only built for A2:2");
    if (auto it = cache_.find("plus-two"); it != cache_.end()) return it->second;
    return cache_.emplace("plus-two", t_inverse(1, 0)).first->second;
}

template <class F>
typename RootVectors<F>::Poly RootVectors<F>::plus_closed() const {
    Poly out;
    for (long r = 0; r <= 3; ++r) {
        QRat coef = (r % 2 ? QRat(1) : QRat(-1)) * qq(static_cast<int>(-2 * r));
        out += A_.divided(1, r) * A_.gen(0) * A_.divided(1, 3 - r) * A_.c(coef);
    }
    return out;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::tilde(long m) {
    if (!a2_) throw UnsupportedRoot("imaginary vectors are only built for A2:2");
    std::string key = "tilde" + std::to_string(m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Poly v;
    if (m == 0) {
        v = A_.constant(-(qq(1) - qq(-1)).inverse());
    } else if (m > 0) {
        Poly x = minus(m);
        v = x * A_.gen(1) * A_.c(QRat(-1)) + A_.gen(1) * x * A_.c(qq(-2));
    }
    return cache_.emplace(key, std::move(v)).first->second;
}

template <class F>
typename RootVectors<F>::Poly RootVectors<F>::tilde_closed() const {
    Poly e0 = A_.gen(0), e1 = A_.gen(1);
    return e0 * e1 * e1 + e1 * e0 * e1 * A_.c(-qq(-3) * q_int(2)) + e1 * e1 * e0 * A_.c(qq(-6));
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::imag(long m) {
    if (!a2_) throw UnsupportedRoot("imaginary vectors are only built for A2:2");
    if (m < 1) throw UnsupportedRoot("imaginary degree must be positive");
    std::string key = "imag" + std::to_string(m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    // 1 + a(u) with a_j = -(q - q^{-1}) tilde_j; E_m = [u^m] log(1 + a) / (q - q^{-1})
    QRat h = qq(1) - qq(-1);
    std::vector<Poly> a(static_cast<size_t>(m + 1));
    for (long j = 1; j <= m; ++j) a[static_cast<size_t>(j)] = tilde(j) * A_.c(-h);
    std::vector<Poly> power = a;  // [u^j] a^k, starting at k = 1
    Poly acc = power[static_cast<size_t>(m)];
    for (long k = 2; k <= m; ++k) {
        std::vector<Poly> next(static_cast<size_t>(m + 1));
        for (long j = k; j <= m; ++j)
            for (long s = 1; s <= j - (k - 1); ++s)
                next[static_cast<size_t>(j)] += a[static_cast<size_t>(s)] * power[static_cast<size_t>(j - s)];
        power = std::move(next);
        QRat coef = QRat(Rational(k % 2 ? 1 : -1, k));
        acc += power[static_cast<size_t>(m)] * A_.c(coef);
    }
    return cache_.emplace(key, acc * A_.c(h.inverse())).first->second;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::ladder_x1() {
    if (a2_) throw UnsupportedRoot("the ladder is built for A4:2");
    if (auto it = cache_.find("x1"); it != cache_.end()) return it->second;
    const auto& D = A_.datum();
    Poly x = A_.gen(0);
    for (int s = D.n; s >= 2; --s) {
        Poly next;
        for (long r = 0; r <= 2; ++r) {
            QRat coef = (r % 2 ? QRat(-1) : QRat(1)) * qq(static_cast<int>(-2 * r));
            next += A_.divided(s, r) * x * A_.divided(s, 2 - r) * A_.c(coef);
        }
        x = std::move(next);
    }
    return cache_.emplace("x1", std::move(x)).first->second;
}

template <class F>
const typename RootVectors<F>::Poly& RootVectors<F>::a4_minus() {
    if (a2_) throw UnsupportedRoot("delta - alpha_1 via the ladder is built for A4:2");
    if (auto it = cache_.find("a4minus"); it != cache_.end()) return it->second;
    Poly x = ladder_x1();
    Poly v = x * A_.gen(1) * A_.c(QRat(-1)) + A_.gen(1) * x * A_.c(qq(-4));
    return cache_.emplace("a4minus", std::move(v)).first->second;
}

template <class F>
typename RootVectors<F>::Poly RootVectors<F>::root_vector(const RootSymbol& s) {
    if (!a2_) throw UnsupportedRoot("PBW root vectors are only built for A2:2");
    if (!s.real) {
        if (s.i != 1) throw UnsupportedRoot("no imaginary index " + std::to_string(s.i));
        return imag(s.m);
    }
    auto [m, a] = split_delta(A_.datum(), beta(A_.datum(), T_, s.r));
    long k = a[1];
    if (k == -2 && m == 1) return A_.gen(0);
    if (k == -1) return minus(m);
    if (k == 1) return plus(m);
    if (k == 2 && m == 1) return plus2();
    throw UnsupportedRoot("root vector for " + s.code() + " is outside the catalog");
}

template <class F>
typename RootVectors<F>::Poly RootVectors<F>::pbw_element(const std::vector<RootSymbol>& gamma) {
    Poly out = A_.one();
    for (const auto& s : gamma) out = out * root_vector(s);
    return out;
}

template class RootVectors<ExactField>;
template class RootVectors<ModField>;

// ---------------- partitions and points ----------------

long partition_count(const CartanDatum& D, const RootVec& eta) {
    size_t n = eta.size();
    std::vector<long> stride(n, 1);
    long cells = 1;
    for (size_t i = 0; i < n; ++i) {
        stride[i] = cells;
        cells *= eta[i] + 1;
    }
    auto decode = [&](long code) {
        RootVec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = (code / stride[i]) % (eta[i] + 1);
        return v;
    };
    std::vector<long> ways(static_cast<size_t>(cells), 0);
    ways[0] = 1;
    for (long code = 1; code < cells; ++code) {
        RootVec v = decode(code);
        long mult = 0;
        switch (classify_root(D, v)) {
            case RootClass::Real: mult = 1; break;
            case RootClass::Imaginary: mult = imag_mult(D, split_delta(D, v).first).multiplicity; break;
            case RootClass::NotARoot: break;
        }
        for (long copy = 0; copy < mult; ++copy)
            for (long x = 0; x < cells; ++x) {
                RootVec w = decode(x);
                bool fits = true;
                for (size_t i = 0; i < n; ++i) fits = fits && w[i] + v[i] <= eta[i];
                if (fits) ways[static_cast<size_t>(x + code)] += ways[static_cast<size_t>(x)];
            }
    }
    return ways[static_cast<size_t>(cells - 1)];
}

std::vector<std::uint64_t> sample_points(const Mode& mode) {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> dist(2, mode.p - 2);
    std::vector<std::uint64_t> out;
    while (static_cast<int>(out.size()) < mode.points) {
        auto t = dist(rng);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

}  // namespace qaffine::rank2
