#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unipotent/acceptance.hpp"
#include "unipotent/derivation.hpp"
#include "unipotent/quadratic.hpp"
#include "unipotent/relations.hpp"
#include "unipotent/ringmodel.hpp"
#include "unipotent/spanning.hpp"
#include "unipotent/variety.hpp"

namespace py = pybind11;
using namespace unipotent;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string derive_json(const std::string& ring) {
    return replay_derivation(CoefficientRing::from_flag(ring)).log.to_json().dump();
}

std::string reduce_text(const std::string& expr, const std::string& system) {
    Polynomial p = Polynomial::parse(expr);
    if (system == "table") return reduce(p, table_system()).to_string();
    if (system == "lemma") return reduce(p, lemma_system()).to_string();
    throw std::invalid_argument("system must be 'table' or 'lemma'");
}

std::vector<std::vector<std::string>> matrix_entries(char which) {
    const QMatrix& m = RingModel::printed_matrix(which);
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_str();
    return out;
}

std::string variety_json(int n_min, int n_max, int m_min, int m_max, int word_length) {
    VarietyOptions opts{n_min, n_max, m_min, m_max, word_length};
    return check_group_in_variety(opts).to_json().dump();
}

std::vector<std::string> m_words(int d) {
    std::vector<std::string> out;
    for (const auto& w : build_EM(d).M.elements) out.push_back(w.to_string(d <= 2));
    return out;
}

std::string acceptance(const std::vector<int>& only) {
    py::gil_scoped_release release;
    return acceptance_json(run_acceptance(only, {})).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<InversionRequired>(m, "InversionRequired", PyExc_ArithmeticError);
    m.def("derive_json", &derive_json, py::arg("ring") = "z16");
    m.def("reduce", &reduce_text, py::arg("expr"), py::arg("system") = "table");
    m.def("ring_report_json", [] { return ring_report().dump(); });
    m.def("matrix_entries", &matrix_entries, py::arg("which"));
    m.def("quadratic_report_json", [](int d, int max_d) { return quadratic_report(d, max_d).dump(); },
          py::arg("d"), py::arg("max_d") = kQuadraticDefaultMaxD);
    m.def("variety_json", &variety_json, py::arg("n_min") = -6, py::arg("n_max") = 6, py::arg("m_min") = -6,
          py::arg("m_max") = 6, py::arg("word_length") = 6);
    m.def("spanning_em_json", [](int d) { return spanning_em_report(d).dump(); }, py::arg("d"));
    m.def("spanning_bound_json", [](int d) { return spanning_bound_report(d).dump(); }, py::arg("d"));
    m.def("spanning_pw_json", [](int d) { return spanning_pw_report(d).dump(); }, py::arg("d"));
    m.def("m_words", &m_words, py::arg("d"));
    m.def("acceptance_json", &acceptance, py::arg("only") = std::vector<int>{});
}
