#include "qaffine/rmat.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"
#include "qaffine/imagblock.hpp"

namespace qaffine::rmat {

using nlohmann::json;

std::vector<std::string> PBWMonomial::codes() const {
    std::vector<std::string> out;
    for (const auto& s : symbols) out.push_back(s.code());
    return out;
}

std::string form_name(Form f) { return f == Form::Ebar ? "ebar" : "mixed"; }

Form parse_form(const std::string& s) {
    if (s == "ebar") return Form::Ebar;
    if (s == "mixed") return Form::Mixed;
    throw std::invalid_argument("unknown form '" + s + "' (expected ebar or mixed)");
}

namespace {

struct Candidate {
    RootSymbol sym;
    RootVec root;
};

// Real symbols come in blocks of N consecutive indices; heights grow from block to block.
std::vector<Candidate> candidates(const CartanDatum& D, int H) {
    std::vector<Candidate> out;
    if (H <= 0) return out;
    IotaTable T = iota_table(D);
    for (int sign : {1, -1}) {
        for (long k = 0;; ++k) {
            long lo = sign > 0 ? k * T.N + 1 : -(k + 1) * T.N + 1;
            long hi = sign > 0 ? (k + 1) * T.N : -k * T.N;
            auto block = beta_range(D, T, lo, hi);
            bool any = false;
            for (const auto& [r, v] : block)
                if (height(v) <= H) {
                    out.push_back({RootSymbol::Real(r), v});
                    any = true;
                }
            if (!any) break;
        }
    }
    long dh = height(D.delta());
    for (long m = 1; m * dh <= H; ++m)
        for (int i : level_index(D, m)) out.push_back({RootSymbol::Imag(m, i), m * D.delta()});
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return convex_less(a.sym, b.sym); });
    return out;
}

}  // namespace

std::vector<PBWMonomial> enumerate_pbw(const CartanDatum& D, int H) {
    if (H < 0) throw std::invalid_argument("negative height bound");
    auto cand = candidates(D, H);
    std::vector<PBWMonomial> out;
    PBWMonomial cur{{}, RootVec(static_cast<size_t>(D.size()), 0)};
    std::function<void(size_t, long)> dfs = [&](size_t from, long h) {
        out.push_back(cur);
        for (size_t k = from; k < cand.size(); ++k) {
            long nh = h + height(cand[k].root);
            if (nh > H) continue;
            cur.symbols.push_back(cand[k].sym);
            RootVec saved = cur.weight;
            cur.weight = cur.weight + cand[k].root;
            dfs(k, nh);
            cur.weight = saved;
            cur.symbols.pop_back();
        }
    };
    dfs(0, 0);
    std::stable_sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
        long ha = height(a.weight), hb = height(b.weight);
        if (ha != hb) return ha < hb;
        return a.weight < b.weight;
    });
    return out;
}

namespace {

struct Split {
    std::vector<std::pair<RootSymbol, long>> real;  // symbol, multiplicity
    std::map<long, std::map<int, long>> imag;       // level -> index -> multiplicity
};

Split split(const PBWMonomial& g) {
    Split s;
    for (const auto& sym : g.symbols) {
        if (sym.real) {
            if (!s.real.empty() && s.real.back().first == sym) ++s.real.back().second;
            else s.real.push_back({sym, 1});
        } else {
            ++s.imag[sym.m][sym.i];
        }
    }
    return s;
}

QRat factorial(long k) {
    Rational f(1);
    for (long s = 2; s <= k; ++s) f *= s;
    return QRat(f);
}

class Coefficients {
public:
    explicit Coefficients(const CartanDatum& D) : D_(D), T_(iota_table(D)) {}

    QRat real_part(const Split& s) {
        QRat c(1);
        for (const auto& [sym, mu] : s.real) {
            RootVec a = symbol_root(D_, T_, sym);
            long two_d = bilinear(D_, a, a);
            int d = static_cast<int>(two_d / 2);
            c *= (QRat::q(-d) - QRat::q(d)).pow(static_cast<int>(mu)) / exp_factorial(RootKind::Real, d, mu);
        }
        return c;
    }

    QRat ebar_imag(const Split& s) {
        QRat c(1);
        for (const auto& [m, idx] : s.imag)
            for (const auto& [i, mu] : idx) {
                auto key = std::make_pair(m, i);
                auto it = pb_.find(key);
                if (it == pb_.end()) it = pb_.emplace(key, pairing_bar(D_, m, i).inverse()).first;
                c *= it->second.pow(static_cast<int>(mu)) / factorial(mu);
            }
        return c;
    }

    // coefficient of prod E^e (x) prod F^f in exp(sum_ij y_ij E_i (x) F_j) on one level
    QRat mixed_level(long m, const std::map<int, long>& e, const std::map<int, long>& f) {
        auto it = y_.find(m);
        if (it == y_.end()) it = y_.emplace(m, y_matrix(D_, m)).first;
        const QMatrix& Y = it->second;
        std::vector<long> rows(static_cast<size_t>(Y.dim()), 0), cols(static_cast<size_t>(Y.dim()), 0);
        auto pos = [&](int i) {
            auto p = std::find(Y.index.begin(), Y.index.end(), i);
            return static_cast<size_t>(p - Y.index.begin());
        };
        for (const auto& [i, mu] : e) rows[pos(i)] = mu;
        for (const auto& [j, mu] : f) cols[pos(j)] = mu;
        size_t n = rows.size();
        QRat total;
        // fill the matrix cell by cell, row-major
        std::function<void(size_t, QRat)> fill = [&](size_t cell, QRat acc) {
            if (cell == n * n) {
                for (size_t k = 0; k < n; ++k)
                    if (rows[k] != 0 || cols[k] != 0) return;
                total += acc;
                return;
            }
            size_t a = cell / n, b = cell % n;
            long cap = std::min(rows[a], cols[b]);
            if (b == n - 1) {
                // the last cell of a row must absorb what is left
                long need = rows[a];
                if (need > cols[b]) return;
                cap = need;
                rows[a] -= cap;
                cols[b] -= cap;
                fill(cell + 1, acc * Y.at(static_cast<int>(a), static_cast<int>(b)).pow(static_cast<int>(cap)) / factorial(cap));
                rows[a] += cap;
                cols[b] += cap;
                return;
            }
            for (long k = 0; k <= cap; ++k) {
                rows[a] -= k;
                cols[b] -= k;
                fill(cell + 1, acc * Y.at(static_cast<int>(a), static_cast<int>(b)).pow(static_cast<int>(k)) / factorial(k));
                rows[a] += k;
                cols[b] += k;
            }
        };
        fill(0, QRat(1));
        return total;
    }

private:
    const CartanDatum& D_;
    IotaTable T_;
    std::map<std::pair<long, int>, QRat> pb_;
    std::map<long, QMatrix> y_;
};

}  // namespace

RTruncation r_truncated(const CartanDatum& D, int H, Form form) {
    RTruncation t;
    t.type = D.type;
    t.height = H;
    t.form = form;
    auto pbw = enumerate_pbw(D, H);
    Coefficients coef(D);
    if (form == Form::Ebar) {
        for (const auto& g : pbw) {
            Split s = split(g);
            t.terms.push_back({g, g, coef.real_part(s) * coef.ebar_imag(s)});
        }
        return t;
    }
    // mixed: monomials sharing the real part and the number of symbols per level pair up
    using Key = std::pair<std::vector<std::string>, std::map<long, long>>;
    std::map<Key, std::vector<size_t>> groups;
    std::vector<Split> splits;
    for (size_t k = 0; k < pbw.size(); ++k) {
        splits.push_back(split(pbw[k]));
        Key key;
        for (const auto& [sym, mu] : splits.back().real) key.first.push_back(sym.code() + "^" + std::to_string(mu));
        for (const auto& [m, idx] : splits.back().imag)
            for (const auto& [i, mu] : idx) key.second[m] += mu;
        groups[key].push_back(k);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (const auto& [key, members] : groups)
        for (size_t a : members)
            for (size_t b : members) pairs.emplace_back(a, b);
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) {
        QRat c = coef.real_part(splits[a]);
        for (const auto& [m, e] : splits[a].imag) c *= coef.mixed_level(m, e, splits[b].imag.at(m));
        if (!c.is_zero()) t.terms.push_back({pbw[a], pbw[b], c});
    }
    return t;
}

// ---------------- document format ----------------

namespace {

json int_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json poly_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& tr : p.triples()) arr.push_back(json::array({int_json(tr[0]), int_json(tr[1]), int_json(tr[2])}));
    return arr;
}

struct Structural : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer json_int(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Structural("bad integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw Structural("expected an integer");
}

LaurentPoly json_poly(const json& j) {
    if (!j.is_array()) throw Structural("expected a triple list");
    std::vector<std::array<Integer, 3>> t;
    for (const auto& tr : j) {
        if (!tr.is_array() || tr.size() != 3) throw Structural("expected [exponent, numerator, denominator]");
        t.push_back({json_int(tr[0]), json_int(tr[1]), json_int(tr[2])});
    }
    try {
        return LaurentPoly::from_triples(t);
    } catch (const std::invalid_argument& e) {
        throw Structural(e.what());
    }
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw Structural(std::string("missing key '") + key + "'");
    return obj.at(key);
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string serialize(const RTruncation& t) {
    json doc;
    doc["header"] = {{"type", t.type.str()}, {"height", t.height}, {"form", form_name(t.form)}, {"tail_marker", t.tail_marker}};
    json terms = json::array();
    for (const auto& term : t.terms)
        terms.push_back({{"gamma", term.gamma.codes()},
                         {"gamma_prime", term.gamma_prime.codes()},
                         {"coeff", {{"num", poly_json(term.coeff.num())}, {"den", poly_json(term.coeff.den())}}}});
    doc["terms"] = terms;
    return doc.dump(1) + "\n";
}

RTruncation deserialize(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, col);
    }
    try {
        RTruncation t;
        const json& h = field(doc, "header");
        try {
            t.type = AffineType::parse(field(h, "type").get<std::string>());
            t.form = parse_form(field(h, "form").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw Structural(e.what());
        }
        t.height = field(h, "height").get<int>();
        t.tail_marker = field(h, "tail_marker").get<std::string>();
        CartanDatum D = build(t.type);
        IotaTable T = iota_table(D);
        std::map<long, RootVec> roots;
        auto mono = [&](const json& arr) {
            if (!arr.is_array()) throw Structural("expected a list of symbol codes");
            PBWMonomial g{{}, RootVec(static_cast<size_t>(D.size()), 0)};
            for (const auto& c : arr) {
                RootSymbol s;
                try {
                    s = RootSymbol::parse(c.get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw Structural(e.what());
                }
                if (s.real && !roots.count(s.r)) roots[s.r] = beta(D, T, s.r);
                g.weight = g.weight + (s.real ? roots.at(s.r) : s.m * D.delta());
                g.symbols.push_back(s);
            }
            return g;
        };
        for (const auto& term : field(doc, "terms")) {
            const json& c = field(term, "coeff");
            LaurentPoly num = json_poly(field(c, "num")), den = json_poly(field(c, "den"));
            if (den.is_zero()) throw Structural("zero denominator");
            t.terms.push_back({mono(field(term, "gamma")), mono(field(term, "gamma_prime")), QRat(num, den)});
        }
        return t;
    } catch (const Structural& e) {
        throw ParseError(e.what(), 1, 1);
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

}  // namespace qaffine::rmat
