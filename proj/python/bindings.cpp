#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qaffine/cartan.hpp"
#include "qaffine/imagblock.hpp"
#include "qaffine/qarith.hpp"
#include "qaffine/rank2.hpp"
#include "qaffine/rmat.hpp"
#include "qaffine/weyl.hpp"

namespace py = pybind11;
using namespace qaffine;

namespace {

std::vector<std::vector<QRat>> rows(const QMatrix& m) { return m.a; }

py::list records(const std::vector<CheckResult>& v) {
    py::list out;
    for (const auto& r : v) {
        py::dict d;
        d["id"] = r.id;
        d["status"] = r.ok ? "pass" : "fail";
        d["detail"] = r.detail;
        out.append(d);
    }
    return out;
}

py::dict datum(const std::string& type) {
    auto D = build(type);
    py::dict d;
    d["type"] = D.type.str();
    d["n"] = D.n;
    d["cartan"] = D.A;
    d["d"] = D.d;
    d["dtilde"] = D.dtilde;
    d["delta"] = D.delta();
    d["form"] = D.B;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum affine algebra data, R-matrix truncations and identity checks";

    py::register_exception<InvalidType>(m, "InvalidType", PyExc_ValueError);
    py::register_exception<NotReduced>(m, "NotReduced", PyExc_ValueError);
    py::register_exception<rmat::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<QRat>(m, "QRat")
        .def(py::init<long>(), py::arg("c") = 0)
        .def_static("q", &QRat::q, py::arg("e") = 1)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("is_zero", &QRat::is_zero)
        .def("__str__", &QRat::str)
        .def("__repr__", [](const QRat& x) { return "QRat(" + x.str() + ")"; });

    m.def("q_int", [](long n, int r) { return q_int(n, r); }, py::arg("n"), py::arg("r") = 1);
    m.def("q_binom", [](long r, long s, int k) { return q_binom(r, s, k); }, py::arg("r"), py::arg("s"), py::arg("m") = 1);

    m.def("cartan", &datum, py::arg("type"));
    m.def("inversions", [](const std::string& t, const std::vector<int>& w) { return inversion_list(build(t), w); },
          py::arg("type"), py::arg("word"));
    m.def("betas", [](const std::string& t, long lo, long hi) {
            auto D = build(t);
            return beta_range(D, iota_table(D), lo, hi);
        }, py::arg("type"), py::arg("lo"), py::arg("hi"));

    m.def("det", [](const std::string& t, long r) { return det_r(build(t), r); }, py::arg("type"), py::arg("r"));
    m.def("h_matrix", [](const std::string& t, long r) { return rows(h_matrix(build(t), r)); }, py::arg("type"), py::arg("r"));
    m.def("z_matrix", [](const std::string& t, long r) { return rows(z_matrix(build(t), r)); }, py::arg("type"), py::arg("r"));
    m.def("level_index", [](const std::string& t, long r) { return level_index(build(t), r); }, py::arg("type"), py::arg("r"));
    m.def("pairing_bar", [](const std::string& t, long r, int i) { return pairing_bar(build(t), r, i); },
          py::arg("type"), py::arg("r"), py::arg("i"));
    m.def("imag_checks", [](const std::string& t, long rmax) {
            std::vector<CheckResult> res;
            {
                py::gil_scoped_release release;
                res = imag_checks(build(t), rmax);
            }
            return records(res);
        }, py::arg("type"), py::arg("rmax"));

    m.def("rmatrix", [](const std::string& t, int height, const std::string& form) {
            return rmat::serialize(rmat::r_truncated(build(t), height, rmat::parse_form(form)));
        }, py::arg("type"), py::arg("height"), py::arg("form") = "ebar");
    m.def("normalize_rmatrix", [](const std::string& text) { return rmat::serialize(rmat::deserialize(text)); },
          py::arg("text"), "Parse a document and write it back out.");

    m.def("partition_count", [](const std::string& t, const RootVec& eta) { return rank2::partition_count(build(t), eta); },
          py::arg("type"), py::arg("weight"));
    m.def("catalog_ids", &rank2::catalog_ids);
    m.def("verify_rank2", [](const std::string& id, int height, bool exact, std::uint64_t seed, std::uint64_t p) {
            rank2::Mode mode;
            mode.exact = exact;
            mode.seed = seed;
            if (p) mode.p = p;
            std::vector<CheckResult> res;
            {
                py::gil_scoped_release release;
                res = rank2::verify_catalog(id, height, mode);
            }
            return records(res);
        }, py::arg("case") = "all", py::arg("height") = 6, py::arg("exact") = false, py::arg("seed") = 1, py::arg("p") = 0);
}
