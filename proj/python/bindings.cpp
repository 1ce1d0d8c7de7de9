// Copyright 2026 The betaroc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betaroc/analysis.hpp"
#include "betaroc/beta_distribution.hpp"
#include "betaroc/errors.hpp"
#include "betaroc/fitting.hpp"
#include "betaroc/ingest.hpp"
#include "betaroc/report.hpp"
#include "betaroc/special_functions.hpp"
#include "betaroc/synth.hpp"
#include "betaroc/version.hpp"

namespace py = pybind11;
using namespace betaroc;

PYBIND11_MODULE(_betaroc, m) {
    m.doc() = "Beta-distribution models of binary classifier responses: "
              "maximum-likelihood fits, ROC curves and endpoint behaviour";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ScoresParseError", PyExc_ValueError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

    // Special functions.
    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("log_beta", &log_beta, py::arg("a"), py::arg("b"));
    m.def("digamma", &digamma, py::arg("x"));
    m.def("trigamma", &trigamma, py::arg("x"));
    m.def("reg_inc_beta", &reg_inc_beta, py::arg("x"), py::arg("a"), py::arg("b"));

    // Beta distribution.
    py::class_<BetaParams>(m, "BetaParams")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &BetaParams::alpha)
        .def_readonly("beta", &BetaParams::beta)
        .def("__repr__", [](const BetaParams& p) {
            return "BetaParams(" + std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ")";
        });

    py::class_<ShapeClass>(m, "ShapeClass")
        .def_property_readonly("fine",
                               [](const ShapeClass& s) { return std::string(to_string(s.fine)); })
        .def_property_readonly(
            "coarse", [](const ShapeClass& s) { return std::string(to_string(s.coarse)); })
        .def_readonly("symmetric", &ShapeClass::symmetric)
        .def("__repr__", [](const ShapeClass& s) {
            return "ShapeClass(fine=" + std::string(to_string(s.fine)) +
                   ", coarse=" + std::string(to_string(s.coarse)) + ")";
        });

    m.def("pdf", &pdf, py::arg("params"), py::arg("x"));
    m.def("cdf", &cdf, py::arg("params"), py::arg("x"));
    m.def("quantile", &quantile, py::arg("params"), py::arg("q"));
    m.def(
        "moments",
        [](const BetaParams& p) {
            const Moments mo = moments(p);
            return py::make_tuple(mo.mean, mo.variance);
        },
        py::arg("params"));
    m.def("classify_shape", &classify_shape, py::arg("params"), py::arg("tol") = 1e-9);
    m.def("sample", &sample, py::arg("params"), py::arg("n"), py::arg("seed"));

    // Fitting.
    py::class_<FitConfig>(m, "FitConfig")
        .def(py::init([](double clamp_epsilon, double grad_tol, int max_iter, double param_floor,
                         double param_ceiling) {
                 FitConfig c{clamp_epsilon, grad_tol, max_iter, param_floor, param_ceiling};
                 c.validate();
                 return c;
             }),
             py::arg("clamp_epsilon") = 1e-6, py::arg("grad_tol") = 1e-8,
             py::arg("max_iter") = 500, py::arg("param_floor") = 1e-6,
             py::arg("param_ceiling") = 1e6)
        .def_readwrite("clamp_epsilon", &FitConfig::clamp_epsilon)
        .def_readwrite("grad_tol", &FitConfig::grad_tol)
        .def_readwrite("max_iter", &FitConfig::max_iter)
        .def_readwrite("param_floor", &FitConfig::param_floor)
        .def_readwrite("param_ceiling", &FitConfig::param_ceiling);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("params", &FitResult::params)
        .def_readonly("log_likelihood", &FitResult::log_likelihood)
        .def_readonly("iterations", &FitResult::iterations)
        .def_readonly("converged", &FitResult::converged)
        .def_readonly("initializer", &FitResult::initializer)
        .def_readonly("n_clamped", &FitResult::n_clamped);

    py::class_<FittedPair>(m, "FittedPair")
        .def(py::init([](const BetaParams& client, const BetaParams& imposter) {
                 return FittedPair{FitResult{client, 0.0, 0, true, client, 0},
                                   FitResult{imposter, 0.0, 0, true, imposter, 0}};
             }),
             py::arg("client"), py::arg("imposter"),
             "Wrap exact parameters as a fitted pair (no fit diagnostics)")
        .def_readonly("client", &FittedPair::client)
        .def_readonly("imposter", &FittedPair::imposter);

    m.def("beta_log_likelihood", &beta_log_likelihood, py::arg("params"), py::arg("sample"));
    m.def("mom_init", &mom_init, py::arg("sample"), py::arg("param_floor") = 1e-6,
          py::arg("param_ceiling") = 1e6);
    m.def("fit_mle", &fit_mle, py::arg("sample"), py::arg("config") = FitConfig{});
    m.def("fit_pair", &fit_pair, py::arg("clients"), py::arg("imposters"),
          py::arg("config") = FitConfig{});

    // Analysis.
    py::class_<RocOrientation>(m, "RocOrientation")
        .def(py::init([](bool imposter_positive, bool positive_below) {
                 return RocOrientation{imposter_positive, positive_below};
             }),
             py::arg("imposter_positive") = true, py::arg("positive_below") = true)
        .def_readwrite("imposter_positive", &RocOrientation::imposter_positive)
        .def_readwrite("positive_below", &RocOrientation::positive_below);

    py::class_<RocCurve>(m, "RocCurve")
        .def_property_readonly("points",
                               [](const RocCurve& c) {
                                   py::list out;
                                   for (const auto& p : c.points) {
                                       out.append(py::make_tuple(p.fpr, p.tpr));
                                   }
                                   return out;
                               })
        .def_property_readonly("kind", [](const RocCurve& c) {
            return std::string(c.kind == RocCurve::Kind::Empirical ? "empirical" : "theoretical");
        });

    py::class_<ExtremalReport>(m, "ExtremalReport")
        .def_property_readonly(
            "slope_limit_at_0",
            [](const ExtremalReport& r) { return std::string(to_string(r.slope_limit_at_0)); })
        .def_property_readonly(
            "slope_limit_at_1",
            [](const ExtremalReport& r) { return std::string(to_string(r.slope_limit_at_1)); })
        .def_readonly("above_diagonal_near_0", &ExtremalReport::above_diagonal_near_0)
        .def_readonly("above_diagonal_near_1", &ExtremalReport::above_diagonal_near_1)
        .def_readonly("exponent_at_0", &ExtremalReport::exponent_at_0)
        .def_readonly("exponent_at_1", &ExtremalReport::exponent_at_1);

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def_readonly("tp", &ConfusionCounts::tp)
        .def_readonly("fp", &ConfusionCounts::fp)
        .def_readonly("tn", &ConfusionCounts::tn)
        .def_readonly("fn", &ConfusionCounts::fn);

    py::class_<ThresholdMetrics>(m, "ThresholdMetrics")
        .def_readonly("threshold", &ThresholdMetrics::threshold)
        .def_readonly("counts", &ThresholdMetrics::counts)
        .def_readonly("tpr", &ThresholdMetrics::tpr)
        .def_readonly("ppv", &ThresholdMetrics::ppv)
        .def_readonly("f1", &ThresholdMetrics::f1)
        .def_readonly("tpr_defined", &ThresholdMetrics::tpr_defined)
        .def_readonly("ppv_defined", &ThresholdMetrics::ppv_defined)
        .def_readonly("f1_defined", &ThresholdMetrics::f1_defined);

    m.def("orient", &orient, py::arg("pair"), py::arg("orientation"));
    m.def("empirical_roc", &empirical_roc, py::arg("clients"), py::arg("imposters"),
          py::arg("orientation") = RocOrientation{});
    m.def("empirical_auc", &empirical_auc, py::arg("clients"), py::arg("imposters"),
          py::arg("orientation") = RocOrientation{});
    m.def("ks_statistic", &ks_statistic, py::arg("clients"), py::arg("imposters"));
    m.def("theoretical_roc", &theoretical_roc, py::arg("pair"), py::arg("grid") = 1001);
    m.def("roc_slope", &roc_slope, py::arg("pair"), py::arg("x"));
    m.def("extremal_analysis", &extremal_analysis, py::arg("pair"), py::arg("tol") = 1e-9);
    m.def("threshold_metrics", &threshold_metrics, py::arg("clients"), py::arg("imposters"),
          py::arg("threshold"), py::arg("orientation") = RocOrientation{});
    m.def("roc_area", &roc_area, py::arg("curve"));
    m.def("theoretical_auc", &theoretical_auc, py::arg("pair"));

    // Ingestion and synthesis.
    py::class_<LabeledScores>(m, "LabeledScores")
        .def(py::init([](std::vector<double> clients, std::vector<double> imposters,
                         std::string source) {
                 LabeledScores s;
                 s.clients = std::move(clients);
                 s.imposters = std::move(imposters);
                 s.source = std::move(source);
                 return s;
             }),
             py::arg("clients"), py::arg("imposters"), py::arg("source") = "<python>")
        .def_readonly("clients", &LabeledScores::clients)
        .def_readonly("imposters", &LabeledScores::imposters)
        .def_readonly("source", &LabeledScores::source)
        .def_readonly("n_snapped", &LabeledScores::n_snapped);

    m.def(
        "parse_scores_file",
        [](const std::string& path, const std::string& format) {
            return parse_scores_file(path,
                                     format == "jsonl" ? ScoresFormat::Jsonl : ScoresFormat::Csv);
        },
        py::arg("path"), py::arg("format") = "csv");
    m.def("histogram", &histogram, py::arg("scores"), py::arg("bins") = 20);
    m.def("generate_dataset", &generate_dataset, py::arg("client"), py::arg("imposter"),
          py::arg("n_clients"), py::arg("n_imposters"), py::arg("seed"));
    m.def("derive_subseed", &derive_subseed, py::arg("seed"), py::arg("index"),
          py::arg("stream"));

    // Sweeps.
    py::class_<SweepGrid>(m, "SweepGrid")
        .def(py::init([](std::vector<double> alpha1, std::vector<double> beta1,
                         std::vector<double> alpha2, std::vector<double> beta2, Seed seed,
                         std::size_t n_per_cell) {
                 SweepGrid g{std::move(alpha1), std::move(beta1), std::move(alpha2),
                             std::move(beta2), seed, n_per_cell};
                 g.validate();
                 return g;
             }),
             py::arg("alpha1"), py::arg("beta1"), py::arg("alpha2"), py::arg("beta2"),
             py::arg("seed") = 0, py::arg("n_per_cell") = 0)
        .def_readonly("seed", &SweepGrid::seed)
        .def_readonly("n_per_cell", &SweepGrid::n_per_cell)
        .def("cells", &SweepGrid::cells);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("alpha1", &SweepRow::alpha1)
        .def_readonly("beta1", &SweepRow::beta1)
        .def_readonly("alpha2", &SweepRow::alpha2)
        .def_readonly("beta2", &SweepRow::beta2)
        .def_readonly("client_shape", &SweepRow::client_shape)
        .def_readonly("imposter_shape", &SweepRow::imposter_shape)
        .def_readonly("extremal", &SweepRow::extremal)
        .def_readonly("theoretical_auc", &SweepRow::theo_auc)
        .def_readonly("fit_ok", &SweepRow::fit_ok)
        .def_readonly("has_recovery", &SweepRow::has_recovery)
        .def_readonly("rec_alpha1", &SweepRow::rec_alpha1)
        .def_readonly("rec_beta1", &SweepRow::rec_beta1)
        .def_readonly("rec_alpha2", &SweepRow::rec_alpha2)
        .def_readonly("rec_beta2", &SweepRow::rec_beta2);

    m.def("run_sweep", &run_sweep, py::arg("grid"));

    // Reports and figures.
    py::class_<AnalysisOptions>(m, "AnalysisOptions")
        .def(py::init([](FitConfig fit, double shape_tol, std::size_t roc_grid,
                         RocOrientation orientation, std::vector<double> thresholds) {
                 return AnalysisOptions{fit, shape_tol, roc_grid, orientation,
                                        std::move(thresholds)};
             }),
             py::arg("fit") = FitConfig{}, py::arg("shape_tol") = 1e-9,
             py::arg("roc_grid") = 1001, py::arg("orientation") = RocOrientation{},
             py::arg("thresholds") = std::vector<double>{});

    m.def(
        "analyze_json",
        [](const LabeledScores& scores, const AnalysisOptions& options) {
            return to_json(make_report(scores, options));
        },
        py::arg("scores"), py::arg("options") = AnalysisOptions{},
        "Full analysis pipeline; returns the deterministic report JSON");
    m.def("plot_density", &plot_density, py::arg("scores"), py::arg("fit"),
          py::arg("bins") = 20, py::arg("title") = "");
    m.def("plot_roc", &plot_roc, py::arg("empirical"), py::arg("theoretical"),
          py::arg("title") = "");
}
