#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "b92sec/attack_model.hpp"
#include "b92sec/gf2_codes.hpp"
#include "b92sec/info_analysis.hpp"
#include "b92sec/oracle.hpp"
#include "b92sec/parity_density.hpp"

#include <sstream>

namespace py = pybind11;
using namespace b92;

namespace {

CodeSpec make_code(int n, const std::vector<std::string>& checks,
                   const std::vector<int>& check_parities, const std::string& key_string,
                   int key_parity) {
    std::vector<BitString> cs;
    for (const auto& c : checks) cs.push_back(bitstring_from_string(c));
    return CodeSpec::make(n, cs, check_parities, bitstring_from_string(key_string), key_parity);
}

} // namespace

PYBIND11_MODULE(_b92sec, m) {
    m.doc() = "eavesdropper information for parity-announced linear codes on B92";

    py::register_exception<CodeError>(m, "CodeError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init(&make_code), py::arg("n"), py::arg("checks"), py::arg("check_parities"),
             py::arg("key_string"), py::arg("key_parity") = 0)
        .def_readonly("n", &CodeSpec::n)
        .def_property_readonly("r", &CodeSpec::r)
        .def_property_readonly("checks",
                               [](const CodeSpec& c) {
                                   std::vector<std::string> out;
                                   for (const auto& v : c.checks) out.push_back(to_string(v));
                                   return out;
                               })
        .def_readonly("check_parities", &CodeSpec::check_parities)
        .def_property_readonly("key_string",
                               [](const CodeSpec& c) { return to_string(c.key_string); })
        .def_readonly("key_parity", &CodeSpec::key_parity)
        .def_property_readonly("id", [](const CodeSpec& c) { return code_id(c); })
        .def("distance_profile", [](const CodeSpec& c) { return distance_profile(c); })
        .def("save", [](const CodeSpec& c) {
            std::ostringstream os;
            save_code(os, c);
            return os.str();
        })
        .def("__repr__", [](const CodeSpec& c) { return "<CodeSpec " + code_id(c) + ">"; });

    m.def("hamming_code", &hamming_code, py::arg("r"));
    m.def("load_code_file", &load_code_file, py::arg("path"));
    m.def("load_code_string", &load_code_string, py::arg("text"),
          py::arg("source_name") = "<string>");
    m.def("enumerate_code_classes", &enumerate_code_classes, py::arg("n"), py::arg("max_r") = 3);

    py::class_<Block>(m, "Block")
        .def_readonly("rep", &Block::rep)
        .def_readonly("a", &Block::a)
        .def_readonly("beta", &Block::beta)
        .def("__repr__", [](const Block& b) {
            return "<Block rep=" + std::to_string(b.rep) + " a=" + std::to_string(b.a) +
                   " beta=" + std::to_string(b.beta) + ">";
        });

    py::class_<BlockSpectrum>(m, "BlockSpectrum")
        .def_readonly("n", &BlockSpectrum::n)
        .def_readonly("r", &BlockSpectrum::r)
        .def_readonly("alpha", &BlockSpectrum::alpha)
        .def_readonly("blocks", &BlockSpectrum::blocks);

    m.def("block_spectrum", &block_spectrum, py::arg("code"), py::arg("alpha"));
    m.def("total_information",
          [](const CodeSpec& code, double alpha) {
              return total_information(block_spectrum(code, alpha));
          },
          py::arg("code"), py::arg("alpha"));
    m.def("block_information", &block_information, py::arg("beta"));
    m.def("bms_closed_form", &bms_closed_form, py::arg("n_hat"), py::arg("alpha"));
    m.def("word_information_exact", &word_information_exact, py::arg("n_hat"), py::arg("alpha"));
    m.def("i_sum", &i_sum, py::arg("code"), py::arg("alpha"));
    m.def("i_sum_exact", &i_sum_exact, py::arg("code"), py::arg("alpha"));
    m.def("hamming_bound", &hamming_bound, py::arg("r"), py::arg("alpha"));

    py::class_<InfoReport>(m, "InfoReport")
        .def_readonly("i_total", &InfoReport::i_total)
        .def_readonly("i_sum", &InfoReport::i_sum)
        .def_readonly("i_sum_exact", &InfoReport::i_sum_exact)
        .def_readonly("conjecture_holds", &InfoReport::conjecture_holds)
        .def_readonly("margin", &InfoReport::margin)
        .def_readonly("extrapolated", &InfoReport::extrapolated);
    m.def("conjecture_check", &conjecture_check, py::arg("code"), py::arg("alpha"));

    py::class_<AttackGeometry>(m, "AttackGeometry")
        .def_readonly("theta", &AttackGeometry::theta)
        .def_readonly("theta_prime", &AttackGeometry::theta_prime)
        .def_readonly("alpha", &AttackGeometry::alpha)
        .def("error_rate", &AttackGeometry::error_rate)
        .def("unitarity_residual", &AttackGeometry::unitarity_residual);
    m.def("geometry_from_error", &geometry_from_error, py::arg("theta"), py::arg("p_e"));
    m.def("geometry_from_alpha", &geometry_from_alpha, py::arg("theta"), py::arg("alpha"));
    m.def("alpha_small_angle", &alpha_small_angle, py::arg("theta"), py::arg("p_e"));
    m.def("normalized_error_rate",
          [](const AttackGeometry& g, const std::string& convention) {
              PcConvention conv;
              if (convention == "squared") conv = PcConvention::squared;
              else if (convention == "linear") conv = PcConvention::linear;
              else throw CodeError("convention must be 'squared' or 'linear'");
              return normalized_error_rate(g, conv).p_e_norm;
          },
          py::arg("geometry"), py::arg("convention") = "squared");
    m.def("failure_probability", &failure_probability, py::arg("n"), py::arg("q"));

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("max_offblock_entry", &OracleReport::max_offblock_entry)
        .def_readonly("max_rank2_residual", &OracleReport::max_rank2_residual)
        .def_readonly("max_delta_a", &OracleReport::max_delta_a)
        .def_readonly("max_delta_beta", &OracleReport::max_delta_beta)
        .def_readonly("info_delta", &OracleReport::info_delta)
        .def_readonly("min_eigenvalue", &OracleReport::min_eigenvalue)
        .def_readonly("witness_ok", &OracleReport::witness_ok)
        .def("passes", &OracleReport::passes);
    m.def("run_oracle", &run_oracle, py::arg("code"), py::arg("alpha"));
    m.def("measurement_sweep_info", &measurement_sweep_info, py::arg("beta"), py::arg("steps"));
}
