#include "qaffine/acceptance.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "json.hpp"
#include "qaffine/imagblock.hpp"
#include "qaffine/rank2.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

namespace {

std::vector<CheckResult> prefixed(const std::string& pre, std::vector<CheckResult> v) {
    for (auto& r : v) r.id = pre + r.id;
    return v;
}

std::vector<CheckResult> pick(const std::vector<CheckResult>& all, const std::vector<std::string>& ids) {
    std::vector<CheckResult> out;
    for (const auto& r : all)
        if (std::find(ids.begin(), ids.end(), r.id) != ids.end()) out.push_back(r);
    return out;
}

CheckResult criterion(const std::string& id, const std::vector<CheckResult>& parts, size_t expected) {
    CheckResult r = merge_results(id, parts);
    if (parts.size() != expected) {
        r.ok = false;
        r.detail = "expected " + std::to_string(expected) + " records, found " + std::to_string(parts.size());
    }
    return r;
}

std::vector<CheckResult> catalog(const std::vector<std::string>& ids, int height, const rank2::Mode& mode, const std::string& pre) {
    std::vector<CheckResult> out;
    for (const auto& id : ids)
        for (auto& r : rank2::verify_catalog(id, height, mode)) out.push_back(r);
    return prefixed(pre, out);
}

}  // namespace

SuiteReport acceptance_suite(const SuiteOptions& opt) {
    rank2::Mode mod;
    if (opt.p) mod.p = opt.p;
    mod.seed = opt.seed;
    rank2::Mode exact;
    exact.exact = true;

    auto imag = std::async(std::launch::async, [&] { return prefixed("", imag_suite(opt.max_n, opt.rmax)); });
    auto weyl = std::async(std::launch::async, [&] { return weyl_identity_suite(opt.weyl_max_n); });
    auto full = std::async(std::launch::async, [&] { return prefixed("rank2.", rank2::verify_catalog("all", opt.height, mod)); });
    auto exact_part = std::async(std::launch::async, [&] {
        std::vector<std::string> light, gram;
        for (const auto& id : rank2::catalog_ids())
            (id.ends_with(".gram-kernel") ? gram : light).push_back(id);
        auto out = catalog(light, opt.exact_height, exact, "rank2.exact.");
        for (auto& r : catalog(gram, opt.exact_gram_height, exact, "rank2.exact.")) out.push_back(r);
        return out;
    });
    auto cross = std::async(std::launch::async, [&] { return catalog({"a22.imag-gram-vs-table"}, 12, mod, "cross."); });
    auto canon = std::async(std::launch::async, [&] {
        return catalog({"a22.canonical-element", "a22.pbw-pairing-product"}, 5, mod, "canonical.");
    });
    auto dims = std::async(std::launch::async, [&] { return catalog({"a22.serre-dim"}, 10, mod, "pbw."); });

    SuiteReport rep;
    auto im = imag.get();
    auto wy = weyl.get();
    auto fu = full.get();
    auto ex = exact_part.get();
    auto cr = cross.get();
    auto ca = canon.get();
    auto di = dims.get();

    std::vector<CheckResult> six = fu;
    six.insert(six.end(), ex.begin(), ex.end());
    const size_t ncat = rank2::catalog_ids().size();

    rep.criteria = {
        criterion("criterion.1.determinants", pick(im, {"imag.det"}), 1),
        criterion("criterion.2.inversion", pick(im, {"imag.inverse", "imag.z-table"}), 2),
        criterion("criterion.3.triangularization", pick(im, {"imag.abar-system", "imag.orthogonal"}), 2),
        criterion("criterion.4.pairing", pick(im, {"imag.pairing"}), 1),
        criterion("criterion.5.weyl", wy, std::max<size_t>(wy.size(), 1)),
        criterion("criterion.6.rank2-catalog", six, 2 * ncat),
        criterion("criterion.7.cross-module", cr, 1),
        criterion("criterion.8.canonical-element", ca, 2),
        criterion("criterion.9.pbw-dimension", di, 1),
    };
    for (auto* v : {&im, &wy, &six, &cr, &ca, &di}) rep.parts.insert(rep.parts.end(), v->begin(), v->end());
    std::sort(rep.parts.begin(), rep.parts.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return rep;
}

std::string report_json(const std::vector<CheckResult>& records) {
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : sorted)
        checks.push_back({{"id", r.id}, {"status", r.ok ? "pass" : "fail"}, {"detail", r.detail}});
    nlohmann::ordered_json doc;
    doc["checks"] = checks;
    return doc.dump(1) + "\n";
}

}  // namespace qaffine
