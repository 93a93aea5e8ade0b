// qaffine: tables, R-matrix truncations and verification runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qaffine/acceptance.hpp"
#include "qaffine/cartan.hpp"
#include "qaffine/imagblock.hpp"
#include "qaffine/rank2.hpp"
#include "qaffine/rmat.hpp"
#include "qaffine/weyl.hpp"

using namespace qaffine;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

std::string combo(const RootVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (v[i] != 1) s += std::to_string(v[i]);
        s += "alpha_" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

void show_cartan(const std::string& type) {
    auto D = build(type);
    std::cout << "type " << D.type.str() << " (" << D.type.pretty() << ")\n";
    std::cout << "n = " << D.n << "\n";
    std::cout << "cartan matrix:\n";
    for (const auto& row : D.A) {
        std::cout << " ";
        for (int x : row) std::cout << " " << (x >= 0 ? " " : "") << x;
        std::cout << "\n";
    }
    auto ints = [](const std::vector<int>& v) { return join(std::vector<long>(v.begin(), v.end())); };
    std::cout << "d = " << ints(D.d) << "\n";
    std::cout << "dtilde = " << ints(D.dtilde) << "\n";
    std::cout << "ktilde = " << D.ktilde << "\n";
    std::cout << "delta = " << combo(D.delta()) << "\n";
    std::cout << "form (alpha_i | alpha_j):\n";
    for (const auto& row : D.B) std::cout << "  " << join(row) << "\n";
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> w;
    std::string tok;
    std::stringstream in(s);
    while (std::getline(in, tok, ',')) {
        std::stringstream parts(tok);
        std::string t;
        while (parts >> t) {
            if (t.size() > 1 && t[0] == 's') t = t.substr(1);
            try {
                size_t used = 0;
                int i = std::stoi(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                w.push_back(i);
            } catch (const std::exception&) {
                throw UsageError("bad word letter '" + t + "'");
            }
        }
    }
    return w;
}

std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw UsageError("range must look like a..b");
    try {
        size_t u1 = 0, u2 = 0;
        std::string a = s.substr(0, pos), b = s.substr(pos + 2);
        long lo = std::stol(a, &u1), hi = std::stol(b, &u2);
        if (u1 != a.size() || u2 != b.size() || lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("bad range '" + s + "'");
    }
}

void check_letters(const CartanDatum& D, const std::vector<int>& w) {
    for (int i : w)
        if (i < 0 || i > D.n) throw UsageError("letter " + std::to_string(i) + " is not a vertex of " + D.type.str());
}

void print_matrix(const std::string& name, const QMatrix& m) {
    std::cout << "  " << name << ":\n";
    for (int p = 0; p < m.dim(); ++p)
        for (int s = 0; s < m.dim(); ++s)
            std::cout << "    [" << m.index[static_cast<size_t>(p)] << "," << m.index[static_cast<size_t>(s)] << "] "
                      << m.at(p, s).str() << "\n";
}

void imag_tables(const CartanDatum& D, long rmax) {
    for (long r = 1; r <= rmax; ++r) {
        std::cout << "r = " << r << "\n";
        std::cout << "  det = " << det_r(D, r).str() << "\n";
        print_matrix("H", h_matrix(D, r));
        print_matrix("z", z_matrix(D, r));
        print_matrix("abar", abar_matrix(D, r));
        std::cout << "  pairing_bar:\n";
        for (int i : level_index(D, r)) std::cout << "    [" << i << "] " << pairing_bar(D, r, i).str() << "\n";
    }
}

bool all_ok(const std::vector<CheckResult>& v) {
    for (const auto& r : v)
        if (!r.ok) return false;
    return true;
}

std::uint64_t seed_fallback(bool given, std::uint64_t seed) {
    if (given) return seed;
    if (const char* env = std::getenv("QAFFINE_SEED")) {
        try {
            size_t used = 0;
            std::string s(env);
            auto v = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError("QAFFINE_SEED is not an unsigned integer");
        }
    }
    return 1;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum affine algebra data, R-matrix truncations and identity checks", "qaffine"};
    app.require_subcommand(1);

    std::string type, word, range, form = "ebar", out, case_id = "all";
    long rmax = 4;
    int height = 4;
    bool check = false, exact = false;
    std::uint64_t p = 0, seed = 1;

    auto* cartan = app.add_subcommand("cartan", "Cartan data")->require_subcommand(1);
    auto* cshow = cartan->add_subcommand("show", "print the Cartan datum of a type");
    cshow->add_option("--type", type, "affine type, e.g. A2:2")->required();

    auto* weyl = app.add_subcommand("weyl", "Weyl group combinatorics")->require_subcommand(1);
    auto* winv = weyl->add_subcommand("inversions", "inversion list of a reduced word");
    winv->add_option("--type", type)->required();
    winv->add_option("--word", word, "letters, e.g. 0,1,0")->required();
    auto* wbeta = weyl->add_subcommand("beta", "real roots beta_r of the convex order");
    wbeta->add_option("--type", type)->required();
    wbeta->add_option("--range", range, "a..b")->required();

    auto* imag = app.add_subcommand("imag", "imaginary root blocks")->require_subcommand(1);
    auto* itab = imag->add_subcommand("tables", "det, H, z, abar and pairing for r = 1..rmax");
    itab->add_option("--type", type)->required();
    itab->add_option("--rmax", rmax)->required()->check(CLI::Range(1, 64));
    itab->add_flag("--check", check, "verify the tables and print a report");

    auto* rmatrix = app.add_subcommand("rmatrix", "height-truncated universal R-matrix");
    rmatrix->add_option("--type", type)->required();
    rmatrix->add_option("--height", height)->required()->check(CLI::Range(0, 64));
    rmatrix->add_option("--form", form)->check(CLI::IsMember({"ebar", "mixed"}));
    rmatrix->add_option("--out", out, "output path, - for stdout");

    auto* verify = app.add_subcommand("verify", "verification runs")->require_subcommand(1);
    auto* vr2 = verify->add_subcommand("rank2", "rank-2 identity catalog");
    vr2->add_option("--case", case_id, "case id or all");
    vr2->add_option("--height", height)->required()->check(CLI::Range(1, 40));
    auto* vr2_mod = vr2->add_option("--mod", p, "prime modulus")->check(CLI::Range(std::uint64_t{5}, std::uint64_t{1} << 62));
    auto* vr2_seed = vr2->add_option("--seed", seed);
    auto* vr2_exact = vr2->add_flag("--exact", exact, "exact arithmetic in Q(q)");
    vr2_exact->excludes(vr2_mod)->excludes(vr2_seed);
    vr2->add_option("--out", out);

    auto* vall = verify->add_subcommand("all", "every verification suite, one record per criterion");
    int all_height = 12;
    vall->add_option("--height", all_height, "rank-2 catalog height")->check(CLI::Range(1, 40));
    vall->add_option("--mod", p)->check(CLI::Range(std::uint64_t{5}, std::uint64_t{1} << 62));
    auto* vall_seed = vall->add_option("--seed", seed);
    vall->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cshow) {
            show_cartan(type);
        } else if (*winv) {
            auto D = build(type);
            auto w = parse_word(word);
            check_letters(D, w);
            auto inv = inversion_list(D, w);
            for (size_t k = 0; k < inv.size(); ++k) std::cout << k + 1 << " " << root_str(inv[k]) << "\n";
        } else if (*wbeta) {
            auto D = build(type);
            auto [lo, hi] = parse_range(range);
            auto T = iota_table(D);
            for (const auto& [r, b] : beta_range(D, T, lo, hi)) std::cout << r << " " << root_str(b) << "\n";
        } else if (*itab) {
            auto D = build(type);
            if (!check) {
                imag_tables(D, rmax);
            } else {
                auto res = imag_checks(D, rmax);
                std::cout << report_json(res);
                return all_ok(res) ? 0 : 1;
            }
        } else if (*rmatrix) {
            auto D = build(type);
            write_out(out, rmat::serialize(rmat::r_truncated(D, height, rmat::parse_form(form))));
        } else if (*vr2) {
            rank2::Mode mode;
            mode.exact = exact;
            if (p) mode.p = p;
            mode.seed = seed_fallback(vr2_seed->count() > 0, seed);
            auto res = rank2::verify_catalog(case_id, height, mode);
            write_out(out, report_json(res));
            return all_ok(res) ? 0 : 1;
        } else if (*vall) {
            SuiteOptions opt;
            opt.height = all_height;
            opt.p = p;
            opt.seed = seed_fallback(vall_seed->count() > 0, seed);
            auto rep = acceptance_suite(opt);
            auto records = rep.criteria;
            records.insert(records.end(), rep.parts.begin(), rep.parts.end());
            write_out(out, report_json(records));
            return all_ok(rep.criteria) ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotReduced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
