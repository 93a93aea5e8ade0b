#include "qaffine/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <regex>
#include <sstream>

namespace qaffine {

namespace {

const char* family_name(Family f) {
    static const char* names[] = {"A", "B", "C", "D", "E", "F", "G"};
    return names[static_cast<int>(f)];
}

struct Edge {
    int i, j, aij, aji;
};

std::vector<Edge> chain(int from, int to) {
    std::vector<Edge> e;
    for (int i = from; i < to; ++i) e.push_back({i, i + 1, -1, -1});
    return e;
}

std::vector<Edge> edges_for(const AffineType& t) {
    const int n = t.n();
    std::vector<Edge> e;
    auto add = [&](std::vector<Edge> more) { e.insert(e.end(), more.begin(), more.end()); };
    if (t.k == 1) {
        switch (t.family) {
            case Family::A:
                if (n == 1) return {{0, 1, -2, -2}};
                add(chain(1, n));
                e.push_back({0, 1, -1, -1});
                e.push_back({n, 0, -1, -1});
                return e;
            case Family::B:
                e.push_back({1, 2, -2, -1});
                add(chain(2, n));
                e.push_back({n - 1, 0, -1, -1});
                return e;
            case Family::C:
                e.push_back({1, 2, -1, -2});
                add(chain(2, n));
                e.push_back({n, 0, -2, -1});
                return e;
            case Family::D:
                add(chain(2, n));
                e.push_back({1, 3, -1, -1});
                e.push_back({n - 1, 0, -1, -1});
                return e;
            case Family::E:
                add(chain(2, n));
                e.push_back({1, 4, -1, -1});
                if (n == 6) e.push_back({0, 1, -1, -1});
                if (n == 7) e.push_back({0, 2, -1, -1});
                if (n == 8) e.push_back({8, 0, -1, -1});
                return e;
            case Family::F:
                return {{1, 2, -1, -1}, {2, 3, -2, -1}, {3, 4, -1, -1}, {4, 0, -1, -1}};
            case Family::G:
                return {{1, 2, -3, -1}, {2, 0, -1, -1}};
        }
    }
    if (t.k == 2 && t.family == Family::A && t.tilde_n % 2 == 0) {
        if (n == 1) return {{0, 1, -1, -4}};
        e.push_back({1, 2, -2, -1});
        add(chain(2, n));
        e.push_back({n, 0, -2, -1});
        return e;
    }
    if (t.k == 2 && t.family == Family::A) {
        e.push_back({1, 2, -1, -2});
        add(chain(2, n));
        e.push_back({n - 1, 0, -1, -1});
        return e;
    }
    if (t.k == 2 && t.family == Family::D) {
        e.push_back({1, 2, -2, -1});
        add(chain(2, n));
        e.push_back({n, 0, -1, -2});
        return e;
    }
    if (t.k == 2 && t.family == Family::E) return {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -2, -1}, {3, 4, -1, -1}};
    if (t.k == 3) return {{0, 1, -1, -1}, {1, 2, -3, -1}};
    throw InvalidType("no diagram for " + t.str());
}

}  // namespace

int AffineType::n() const {
    if (k == 1) return tilde_n;
    if (k == 3) return 2;
    switch (family) {
        case Family::A: return tilde_n % 2 == 0 ? tilde_n / 2 : (tilde_n + 1) / 2;
        case Family::D: return tilde_n - 1;
        case Family::E: return 4;
        default: break;
    }
    throw InvalidType("invalid type " + str());
}

TwistKind AffineType::kind() const {
    if (k == 1) return TwistKind::Untwisted;
    if (k == 2 && family == Family::A && tilde_n % 2 == 0) return TwistKind::A2n;
    return TwistKind::Twisted;
}

std::string AffineType::str() const { return family_name(family) + std::to_string(tilde_n) + ":" + std::to_string(k); }

std::string AffineType::pretty() const {
    return std::string(family_name(family)) + "_" + std::to_string(tilde_n) + "^(" + std::to_string(k) + ")";
}

void AffineType::validate() const {
    bool ok = false;
    const int m = tilde_n;
    if (k == 1) {
        switch (family) {
            case Family::A: ok = m >= 1; break;
            case Family::B: ok = m >= 3; break;
            case Family::C: ok = m >= 2; break;
            case Family::D: ok = m >= 4; break;
            case Family::E: ok = m >= 6 && m <= 8; break;
            case Family::F: ok = m == 4; break;
            case Family::G: ok = m == 2; break;
        }
    } else if (k == 2) {
        if (family == Family::A) ok = (m % 2 == 0 && m >= 2) || (m % 2 == 1 && m >= 5);
        if (family == Family::D) ok = m >= 3;
        if (family == Family::E) ok = m == 6;
    } else if (k == 3) {
        ok = family == Family::D && m == 4;
    }
    if (!ok) throw InvalidType("type outside the classification: " + str());
}

AffineType AffineType::parse(const std::string& s) {
    static const std::regex re("^([ABCDEFG])([0-9]+):([123])$");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidType("malformed type string '" + s + "' (expected e.g. A4:2)");
    AffineType t;
    t.family = static_cast<Family>(std::string("ABCDEFG").find(m[1].str()[0]));
    t.tilde_n = std::stoi(m[2].str());
    t.k = std::stoi(m[3].str());
    t.validate();
    return t;
}

std::vector<AffineType> all_types(int max_n) {
    std::vector<AffineType> out;
    auto push = [&](Family f, int tn, int k) {
        AffineType t{f, tn, k};
        out.push_back(t);
    };
    for (int n = 1; n <= max_n; ++n) push(Family::A, n, 1);
    for (int n = 3; n <= max_n; ++n) push(Family::B, n, 1);
    for (int n = 2; n <= max_n; ++n) push(Family::C, n, 1);
    for (int n = 4; n <= max_n; ++n) push(Family::D, n, 1);
    for (int n = 6; n <= 8; ++n) push(Family::E, n, 1);
    push(Family::F, 4, 1);
    push(Family::G, 2, 1);
    for (int n = 1; n <= max_n; ++n) push(Family::A, 2 * n, 2);
    for (int n = 3; n <= max_n; ++n) push(Family::A, 2 * n - 1, 2);
    for (int n = 2; n <= max_n; ++n) push(Family::D, n + 1, 2);
    push(Family::E, 6, 2);
    push(Family::D, 4, 3);
    return out;
}

RootVec CartanDatum::simple(int i) const {
    RootVec v(static_cast<size_t>(n + 1), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

CartanDatum build(const AffineType& type) {
    type.validate();
    CartanDatum D;
    D.type = type;
    D.n = type.n();
    const int sz = D.n + 1;
    D.A.assign(static_cast<size_t>(sz), std::vector<int>(static_cast<size_t>(sz), 0));
    for (int i = 0; i < sz; ++i) D.A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    for (const Edge& e : edges_for(type)) {
        D.A[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)] = e.aij;
        D.A[static_cast<size_t>(e.j)][static_cast<size_t>(e.i)] = e.aji;
    }
    // symmetrizer: d_i a_ij = d_j a_ji, propagated along the (connected) diagram
    std::vector<mpq_class> dq(static_cast<size_t>(sz), 0);
    dq[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        for (int j = 0; j < sz; ++j) {
            int aij = D.A[static_cast<size_t>(i)][static_cast<size_t>(j)], aji = D.A[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (j == i || aij == 0 || sgn(dq[static_cast<size_t>(j)]) != 0) continue;
            dq[static_cast<size_t>(j)] = dq[static_cast<size_t>(i)] * mpq_class(aij) / mpq_class(aji);
            dq[static_cast<size_t>(j)].canonicalize();
            bfs.push(j);
        }
    }
    mpz_class l = 1, g = 0;
    for (auto& x : dq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : dq) {
        mpz_class v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    for (auto& x : dq) D.d.push_back(static_cast<int>(mpz_class(x.get_num() * (l / x.get_den()) / g).get_si()));
    D.B.assign(static_cast<size_t>(sz), std::vector<long>(static_cast<size_t>(sz), 0));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            D.B[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<long>(D.d[static_cast<size_t>(i)]) * D.A[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (D.B[static_cast<size_t>(i)][static_cast<size_t>(j)] != D.B[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::logic_error("Cartan matrix not symmetrizable for " + type.str());
    D.dtilde.assign(static_cast<size_t>(sz), 1);
    if (type.kind() == TwistKind::Twisted) D.dtilde = D.d;
    D.ktilde = 1;
    for (int i = 1; i < sz; ++i) D.ktilde = std::max(D.ktilde, D.dtilde[static_cast<size_t>(i)]);

    // marks: null vector of B normalised by r_0 = 1 (Gaussian elimination on rows 1..n, column 0 moved right)
    std::vector<std::vector<mpq_class>> M(static_cast<size_t>(D.n), std::vector<mpq_class>(static_cast<size_t>(sz)));
    for (int i = 1; i < sz; ++i) {
        for (int j = 1; j < sz; ++j) M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = D.B[static_cast<size_t>(i)][static_cast<size_t>(j)];
        M[static_cast<size_t>(i - 1)][static_cast<size_t>(D.n)] = -D.B[static_cast<size_t>(i)][0];
    }
    for (int c = 0; c < D.n; ++c) {
        int piv = c;
        while (piv < D.n && sgn(M[static_cast<size_t>(piv)][static_cast<size_t>(c)]) == 0) ++piv;
        if (piv == D.n) throw std::logic_error("finite part of Cartan matrix is singular");
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(c)]);
        for (int r = 0; r < D.n; ++r) {
            if (r == c || sgn(M[static_cast<size_t>(r)][static_cast<size_t>(c)]) == 0) continue;
            mpq_class f = M[static_cast<size_t>(r)][static_cast<size_t>(c)] / M[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int k = c; k <= D.n; ++k) M[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * M[static_cast<size_t>(c)][static_cast<size_t>(k)];
        }
    }
    D.marks.assign(static_cast<size_t>(sz), 1);
    for (int i = 1; i < sz; ++i) {
        mpq_class v = M[static_cast<size_t>(i - 1)][static_cast<size_t>(D.n)] / M[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)];
        if (v.get_den() != 1 || sgn(v) <= 0) throw std::logic_error("null root has non-integral marks");
        D.marks[static_cast<size_t>(i)] = v.get_num().get_si();
    }
    for (int i = 0; i < sz; ++i)
        if (bilinear(D, D.simple(i), D.marks) != 0) throw std::logic_error("delta not in the radical");

    // finite roots: closure of {alpha_i : i in I_0} under s_i, i in I_0
    std::set<RootVec> seen;
    std::vector<RootVec> todo;
    for (int i = 1; i < sz; ++i) {
        todo.push_back(D.simple(i));
        seen.insert(D.simple(i));
    }
    while (!todo.empty()) {
        RootVec v = todo.back();
        todo.pop_back();
        for (int i = 1; i < sz; ++i) {
            long c = 0;
            for (int j = 0; j < sz; ++j) c += D.A[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
            RootVec w = v;
            w[static_cast<size_t>(i)] -= c;
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    for (const auto& v : seen) D.finite_roots_.push_back(v);
    for (const auto& v : D.finite_roots_)
        if (std::find(D.finite_roots_.begin(), D.finite_roots_.end(), -v) == D.finite_roots_.end())
            throw std::logic_error("finite root system not symmetric");
    return D;
}

CartanDatum build(const std::string& type) { return build(AffineType::parse(type)); }

long bilinear(const CartanDatum& D, const RootVec& v, const RootVec& w) {
    long s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        long t = 0;
        for (size_t j = 0; j < w.size(); ++j) t += D.B[i][j] * w[j];
        s += v[i] * t;
    }
    return s;
}

long height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

ImagLevel imag_mult(const CartanDatum& D, long m) {
    if (m == 0) throw std::invalid_argument("imag_mult: m must be nonzero");
    ImagLevel L;
    for (int i = 1; i <= D.n; ++i)
        if (m % D.dtilde[static_cast<size_t>(i)] == 0) L.indices.push_back(i);
    L.multiplicity = static_cast<int>(L.indices.size());
    return L;
}

std::pair<long, RootVec> split_delta(const CartanDatum& D, const RootVec& v) {
    long m = v[0];
    RootVec a = v;
    for (size_t i = 0; i < a.size(); ++i) a[i] -= m * D.marks[i];
    return {m, a};
}

RootClass classify_root(const CartanDatum& D, const RootVec& v) {
    auto [m, a] = split_delta(D, v);
    bool zero = std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
    if (zero) return m != 0 ? RootClass::Imaginary : RootClass::NotARoot;
    const auto& roots = D.finite_roots();
    bool in_phi0 = std::binary_search(roots.begin(), roots.end(), a);
    switch (D.kind()) {
        case TwistKind::Untwisted:
            return in_phi0 ? RootClass::Real : RootClass::NotARoot;
        case TwistKind::A2n: {
            if (in_phi0) return RootClass::Real;
            if (m % 2 == 0) return RootClass::NotARoot;
            if (std::any_of(a.begin(), a.end(), [](long x) { return x % 2 != 0; })) return RootClass::NotARoot;
            RootVec h = a;
            for (auto& x : h) x /= 2;
            if (std::binary_search(roots.begin(), roots.end(), h) && bilinear(D, h, h) == 2) return RootClass::Real;
            return RootClass::NotARoot;
        }
        case TwistKind::Twisted: {
            if (!in_phi0) return RootClass::NotARoot;
            long d_alpha = bilinear(D, a, a) / 2;
            return m % d_alpha == 0 ? RootClass::Real : RootClass::NotARoot;
        }
    }
    return RootClass::NotARoot;
}

bool is_positive(const RootVec& v) {
    bool nz = false;
    for (long x : v) {
        if (x < 0) return false;
        if (x > 0) nz = true;
    }
    return nz;
}

bool is_negative(const RootVec& v) { return is_positive(-v); }

RootVec operator+(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RootVec operator-(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RootVec operator-(const RootVec& a) {
    RootVec r = a;
    for (auto& x : r) x = -x;
    return r;
}

RootVec operator*(long s, const RootVec& a) {
    RootVec r = a;
    for (auto& x : r) x *= s;
    return r;
}

std::string root_str(const RootVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace qaffine
