#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burstkit/approx_exp.hpp"
#include "burstkit/approx_geo.hpp"
#include "burstkit/exact.hpp"
#include "burstkit/synth.hpp"
#include "burstkit/viterbi.hpp"

namespace py = pybind11;
using namespace burstkit;

namespace {

DelaySequence delays_for(std::vector<double> values, Family family) {
    return DelaySequence(std::move(values),
                         family == Family::Geometric ? DelayKind::Integer : DelayKind::Real);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Burst detection with optimised base and change rates";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", m.attr("Error").ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", m.attr("Error").ptr());
    py::register_exception<CapacityError>(m, "CapacityError", m.attr("Error").ptr());
    py::register_exception<InputError>(m, "InputError", m.attr("Error").ptr());

    py::enum_<Family>(m, "Family")
        .value("EXPONENTIAL", Family::Exponential)
        .value("GEOMETRIC", Family::Geometric);

    py::class_<Diagnostics>(m, "Diagnostics")
        .def_readonly("beta_candidates", &Diagnostics::beta_candidates)
        .def_readonly("alpha_candidates", &Diagnostics::alpha_candidates)
        .def_readonly("skipped", &Diagnostics::skipped)
        .def_readonly("tied_cells", &Diagnostics::tied_cells);

    py::class_<Solution>(m, "Solution")
        .def_property_readonly("levels", [](const Solution& s) { return s.levels.levels; })
        .def_readonly("alpha", &Solution::alpha)
        .def_readonly("beta", &Solution::beta)
        .def_readonly("score", &Solution::score)
        .def_readonly("viterbi_calls", &Solution::viterbi_calls)
        .def_readonly("diagnostics", &Solution::diagnostics)
        .def("__repr__", [](const Solution& s) {
            return "<Solution score=" + std::to_string(s.score) + " alpha=" + std::to_string(s.alpha) +
                   " beta=" + std::to_string(s.beta) + ">";
        });

    m.def("score", [](const std::vector<int>& levels, std::vector<double> delays, Family family, double alpha,
                      double beta, double gamma, int k) {
        return score_total({levels, k}, delays_for(std::move(delays), family),
                           BurstParams(family, alpha, beta, gamma, k));
    }, py::arg("levels"), py::arg("delays"), py::arg("family"), py::arg("alpha"), py::arg("beta"),
       py::arg("gamma"), py::arg("k"));

    m.def("viterbi", [](std::vector<double> delays, Family family, double alpha, double beta, double gamma, int k) {
        return viterbi(delays_for(std::move(delays), family), BurstParams(family, alpha, beta, gamma, k));
    }, py::arg("delays"), py::arg("family"), py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 1.0,
       py::arg("k") = 4);

    m.def("exp_alpha", [](std::vector<double> delays, double alpha, double gamma, int k, double epsilon, bool prune) {
        return exp_alpha(DelaySequence(std::move(delays)), alpha, gamma, k, epsilon, prune);
    }, py::arg("delays"), py::arg("alpha"), py::arg("gamma") = 1.0, py::arg("k") = 4, py::arg("epsilon") = 0.05,
       py::arg("prune") = false);

    m.def("approx_exp", [](std::vector<double> delays, double gamma, int k, double epsilon, bool prune) {
        return approx_exp(DelaySequence(std::move(delays)), gamma, k, epsilon, prune);
    }, py::arg("delays"), py::arg("gamma") = 1.0, py::arg("k") = 4, py::arg("epsilon") = 0.05,
       py::arg("prune") = false);

    m.def("geo_alpha", [](std::vector<double> delays, double alpha, double gamma, int k, double epsilon) {
        return geo_alpha(DelaySequence(std::move(delays), DelayKind::Integer), alpha, gamma, k, epsilon);
    }, py::arg("delays"), py::arg("alpha"), py::arg("gamma") = 1.0, py::arg("k") = 4, py::arg("epsilon") = 0.05);

    m.def("approx_geo", [](std::vector<double> delays, double gamma, int k, double epsilon) {
        return approx_geo(DelaySequence(std::move(delays), DelayKind::Integer), gamma, k, epsilon);
    }, py::arg("delays"), py::arg("gamma") = 1.0, py::arg("k") = 4, py::arg("epsilon") = 0.05);

    m.def("exact", [](std::vector<double> delays, double alpha, double gamma, int k) {
        return solve_exp_alpha_exact(DelaySequence(std::move(delays)), alpha, gamma, k);
    }, py::arg("delays"), py::arg("alpha"), py::arg("gamma") = 1.0, py::arg("k") = 4);

    m.def("refit_beta", [](std::vector<double> delays, const std::vector<int>& levels, double alpha) {
        const int k = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
        return refit_beta(DelaySequence(std::move(delays)), {levels, k}, alpha);
    }, py::arg("delays"), py::arg("levels"), py::arg("alpha"));

    m.def("generate", [](std::size_t n, std::size_t burst_start, std::size_t burst_end, double base_rate,
                         double burst_rate, std::uint64_t seed) {
        const auto p = generate({n, burst_start, burst_end, base_rate, burst_rate, seed});
        const auto v = p.delays.values();
        return py::make_tuple(std::vector<double>(v.begin(), v.end()), p.truth.levels);
    }, py::arg("n"), py::arg("burst_start"), py::arg("burst_end"), py::arg("base_rate") = 1.0,
       py::arg("burst_rate") = 2.0, py::arg("seed") = 0);

    m.def("hamming", [](const std::vector<int>& a, const std::vector<int>& b) {
        return hamming({a, 0}, {b, 0});
    });
}
