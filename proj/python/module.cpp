#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arnoldnf/localalg.hpp"
#include "arnoldnf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace arnoldnf;

namespace {

std::string classify_json(const std::string& poly, const std::vector<std::string>& vars, std::optional<long> truncation,
                          bool trace, int digits) {
    Outcome o;
    {
        py::gil_scoped_release release;
        o = classify(parse_poly(poly, vars), truncation);
    }
    return render_json(o, digits, trace).dump();
}

std::string classify_text(const std::string& poly, const std::vector<std::string>& vars, int digits) {
    return render_text(classify(parse_poly(poly, vars)), digits, false);
}

std::optional<long> milnor_number(const std::string& poly, const std::vector<std::string>& vars) {
    return milnor(parse_poly(poly, vars)).mu;
}

std::string normal_form_of(const std::string& type, const std::vector<std::string>& params) {
    std::vector<AlgebraicScalar> ps;
    for (const auto& p : params) ps.emplace_back(parse_rational(p));
    return to_string(normal_form(type_record(parse_type(type)), ps));
}

std::vector<std::string> catalog_types() {
    std::vector<std::string> out;
    for (const auto& id : sample_types()) out.push_back(id.name());
    return out;
}

std::string harness_json(std::uint64_t seed, int count, const std::vector<std::string>& types) {
    HarnessConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    for (const auto& t : types) cfg.types.push_back(parse_type(t));
    py::gil_scoped_release release;
    return run_harness(cfg).dump();
}

}  // namespace

PYBIND11_MODULE(_arnoldnf, m) {
    m.doc() = "Arnold normal forms of corank <= 2, modality <= 2 singularities";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("classify_json", &classify_json, py::arg("poly"), py::arg("vars") = std::vector<std::string>{"x", "y"},
          py::arg("truncation") = py::none(), py::arg("trace") = false, py::arg("digits") = 10);
    m.def("classify_text", &classify_text, py::arg("poly"), py::arg("vars") = std::vector<std::string>{"x", "y"},
          py::arg("digits") = 10);
    m.def("milnor", &milnor_number, py::arg("poly"), py::arg("vars") = std::vector<std::string>{"x", "y"},
          "Milnor number, None when infinite.");
    m.def("normal_form", &normal_form_of, py::arg("type"), py::arg("params") = std::vector<std::string>{});
    m.def("catalog_types", &catalog_types);
    m.def("harness_json", &harness_json, py::arg("seed") = 1, py::arg("count") = 1,
          py::arg("types") = std::vector<std::string>{});
}
