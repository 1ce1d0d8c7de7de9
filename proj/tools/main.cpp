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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betaroc/analysis.hpp"
#include "betaroc/beta_distribution.hpp"
#include "betaroc/errors.hpp"
#include "betaroc/fitting.hpp"
#include "betaroc/ingest.hpp"
#include "betaroc/report.hpp"
#include "betaroc/synth.hpp"
#include "betaroc/version.hpp"

namespace {

using namespace betaroc;

// Exit codes shared by all subcommands: 0 success, 1 input error,
// 2 fit failure.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kFitFailure = 2;

std::string g_input = "-";
std::string g_output = "-";
std::string g_format = "csv";

struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (path != "-") {
            file.open(path, std::ios::binary);
            if (!file) throw InputError("cannot open output '" + path + "'");
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

ScoresFormat parse_format(const std::string& f) {
    if (f == "csv") return ScoresFormat::Csv;
    if (f == "jsonl") return ScoresFormat::Jsonl;
    throw InputError("unknown format '" + f + "' (expected csv or jsonl)");
}

LabeledScores read_scores(const std::string& path, const std::string& format) {
    const ScoresFormat fmt = parse_format(format);
    if (path == "-") {
        return parse_scores(std::cin, fmt, "<stdin>");
    }
    return parse_scores_file(path, fmt);
}

RocOrientation parse_orientation(const std::string& positive, const std::string& direction) {
    RocOrientation o;
    if (positive == "imposter") o.imposter_positive = true;
    else if (positive == "client") o.imposter_positive = false;
    else throw InputError("unknown positive class '" + positive + "'");
    if (direction == "low") o.positive_below = true;
    else if (direction == "high") o.positive_below = false;
    else throw InputError("unknown direction '" + direction + "' (expected low or high)");
    return o;
}

// Axis values as "v1,v2,..." or "start:stop:step" (stop inclusive).
std::vector<double> parse_axis(const std::string& spec) {
    std::vector<double> values;
    auto parse_one = [](const std::string& tok) {
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw InputError("malformed axis value '" + tok + "'");
        }
    };
    if (spec.find(':') != std::string::npos) {
        std::stringstream ss(spec);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
            throw InputError("malformed axis range '" + spec + "' (want start:stop:step)");
        }
        const double start = parse_one(a), stop = parse_one(b), step = parse_one(c);
        if (!(step > 0.0) || stop < start) {
            throw InputError("malformed axis range '" + spec + "'");
        }
        for (double v = start; v <= stop + step * 1e-9; v += step) values.push_back(v);
        return values;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(parse_one(tok));
    if (values.empty()) throw InputError("empty axis spec");
    return values;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json fit_result_json(const FitResult& r, double shape_tol) {
    const ShapeClass shape = classify_shape(r.params, shape_tol);
    return {{"alpha", r.params.alpha},
            {"beta", r.params.beta},
            {"log_likelihood", r.log_likelihood},
            {"iterations", r.iterations},
            {"converged", r.converged},
            {"init_alpha", r.initializer.alpha},
            {"init_beta", r.initializer.beta},
            {"n_clamped", r.n_clamped},
            {"shape_fine", to_string(shape.fine)},
            {"shape_coarse", to_string(shape.coarse)}};
}

int run_fit(const FitConfig& fit_cfg, double shape_tol) {
    LabeledScores scores = read_scores(g_input, g_format);
    FittedPair pair = [&] {
        try {
            return fit_pair(scores.clients, scores.imposters, fit_cfg);
        } catch (const FitError& e) {
            std::cerr << "betaroc fit: " << e.what() << '\n';
            std::exit(kFitFailure);
        }
    }();
    nlohmann::ordered_json out{{"schema_version", 1},
                               {"source", scores.source},
                               {"client", fit_result_json(pair.client, shape_tol)},
                               {"imposter", fit_result_json(pair.imposter, shape_tol)}};
    OutputStream os(g_output);
    os.get() << out.dump(2) << '\n';
    return (pair.client.converged && pair.imposter.converged) ? kOk : kFitFailure;
}

int run_analyze(const AnalysisOptions& options) {
    LabeledScores scores = read_scores(g_input, g_format);
    AnalysisReport report = [&] {
        try {
            return make_report(scores, options);
        } catch (const FitError& e) {
            std::cerr << "betaroc analyze: " << e.what() << '\n';
            std::exit(kFitFailure);
        }
    }();
    OutputStream os(g_output);
    os.get() << to_json(report);
    if (!report.client.fit.converged || !report.imposter.fit.converged) {
        std::cerr << "betaroc analyze: fit did not converge; report written anyway\n";
        return kFitFailure;
    }
    return kOk;
}

int run_roc(const std::string& kind, std::size_t grid, const FitConfig& fit_cfg,
            RocOrientation orientation) {
    if (kind != "empirical" && kind != "theoretical" && kind != "both") {
        throw InputError("unknown roc kind '" + kind + "'");
    }
    LabeledScores scores = read_scores(g_input, g_format);
    OutputStream os(g_output);
    auto emit = [&](const char* label, const RocCurve& curve) {
        for (const auto& p : curve.points) {
            os.get() << label << ',' << fmt_g(p.fpr) << ',' << fmt_g(p.tpr) << '\n';
        }
    };
    os.get() << "kind,fpr,tpr\n";
    if (kind == "empirical" || kind == "both") {
        emit("empirical", empirical_roc(scores.clients, scores.imposters, orientation));
    }
    if (kind == "theoretical" || kind == "both") {
        try {
            const FittedPair pair =
                orient(fit_pair(scores.clients, scores.imposters, fit_cfg), orientation);
            emit("theoretical", theoretical_roc(pair, grid));
        } catch (const FitError& e) {
            std::cerr << "betaroc roc: " << e.what() << '\n';
            return kFitFailure;
        }
    }
    return kOk;
}

int run_metrics(const std::vector<double>& thresholds, RocOrientation orientation) {
    if (thresholds.empty()) {
        throw InputError("metrics: at least one --thresholds value is required");
    }
    LabeledScores scores = read_scores(g_input, g_format);
    OutputStream os(g_output);
    os.get() << "threshold,tp,fp,tn,fn,tpr,ppv,f1\n";
    for (double t : thresholds) {
        const ThresholdMetrics m =
            threshold_metrics(scores.clients, scores.imposters, t, orientation);
        os.get() << fmt_g(t) << ',' << m.counts.tp << ',' << m.counts.fp << ',' << m.counts.tn
                 << ',' << m.counts.fn << ',' << (m.tpr_defined ? fmt_g(m.tpr) : "nan") << ','
                 << (m.ppv_defined ? fmt_g(m.ppv) : "nan") << ','
                 << (m.f1_defined ? fmt_g(m.f1) : "nan") << '\n';
    }
    return kOk;
}

int run_synth(double a1, double b1, double a2, double b2, std::size_t n_clients,
              std::size_t n_imposters, Seed seed) {
    const LabeledScores scores =
        generate_dataset(BetaParams(a1, b1), BetaParams(a2, b2), n_clients, n_imposters, seed);
    OutputStream os(g_output);
    write_scores_csv(os.get(), scores);
    return kOk;
}

int run_sweep(const std::string& a1, const std::string& b1, const std::string& a2,
              const std::string& b2, Seed seed, std::size_t n_per_cell) {
    SweepGrid grid;
    grid.alpha1 = parse_axis(a1);
    grid.beta1 = parse_axis(b1);
    grid.alpha2 = parse_axis(a2);
    grid.beta2 = parse_axis(b2);
    grid.seed = seed;
    grid.n_per_cell = n_per_cell;
    OutputStream os(g_output);
    write_sweep_csv(os.get(), grid);
    return kOk;
}

int run_plot(const std::string& kind, const std::string& report_path, std::size_t bins,
             std::size_t grid, const FitConfig& fit_cfg, RocOrientation orientation) {
    if (kind != "density" && kind != "roc") {
        throw InputError("unknown plot kind '" + kind + "' (expected density or roc)");
    }
    if (!report_path.empty()) {
        if (kind != "roc") {
            throw InputError("--report input supports only kind=roc");
        }
        std::ifstream in(report_path);
        if (!in) throw InputError("cannot open '" + report_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        const AnalysisReport report = report_from_json(buffer.str());
        const FittedPair pair = orient({report.client.fit, report.imposter.fit},
                                       report.options.orientation);
        OutputStream os(g_output);
        os.get() << plot_roc_theoretical(theoretical_roc(pair, grid), report.source);
        return kOk;
    }

    LabeledScores scores = read_scores(g_input, g_format);
    if (kind == "density") {
        const FittedPair pair = [&] {
            try {
                return fit_pair(scores.clients, scores.imposters, fit_cfg);
            } catch (const FitError& e) {
                std::cerr << "betaroc plot: " << e.what() << '\n';
                std::exit(kFitFailure);
            }
        }();
        // One SVG per class; a "-" output concatenates both documents.
        if (g_output == "-") {
            std::cout << plot_density(scores.clients, pair.client.params, bins, "clients");
            std::cout << plot_density(scores.imposters, pair.imposter.params, bins, "imposters");
        } else {
            auto stem = g_output;
            const auto dot = stem.rfind(".svg");
            if (dot != std::string::npos && dot == stem.size() - 4) stem = stem.substr(0, dot);
            std::ofstream c(stem + "_client.svg", std::ios::binary);
            std::ofstream i(stem + "_imposter.svg", std::ios::binary);
            if (!c || !i) throw InputError("cannot open output files at '" + stem + "'");
            c << plot_density(scores.clients, pair.client.params, bins, "clients");
            i << plot_density(scores.imposters, pair.imposter.params, bins, "imposters");
        }
        return kOk;
    }
    try {
        const FittedPair pair =
            orient(fit_pair(scores.clients, scores.imposters, fit_cfg), orientation);
        const RocCurve emp = empirical_roc(scores.clients, scores.imposters, orientation);
        OutputStream os(g_output);
        os.get() << plot_roc(emp, theoretical_roc(pair, grid), scores.source);
    } catch (const FitError& e) {
        std::cerr << "betaroc plot: " << e.what() << '\n';
        return kFitFailure;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beta-distribution models of binary classifier responses: "
                 "maximum-likelihood fits, ROC curves and endpoint behaviour"};
    app.set_version_flag("--version", betaroc::kVersion);
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 1 input error, 2 fit failure.\n"
               "Data goes to stdout (or --output), diagnostics to stderr.");

    FitConfig fit_cfg;
    double shape_tol = 1e-9;
    std::size_t grid = 1001;
    std::size_t bins = 20;
    std::string positive = "imposter";
    std::string direction = "low";
    std::string kind;
    std::string report_path;
    std::vector<double> thresholds;
    std::string ax_a1 = "1", ax_b1 = "1", ax_a2 = "1", ax_b2 = "1";
    double p_a1 = 1, p_b1 = 1, p_a2 = 1, p_b2 = 1;
    std::size_t n_clients = 1000, n_imposters = 1000, n_per_cell = 0;
    Seed seed = 0;

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("-i,--input", g_input, "Input scores file ('-' for stdin)");
        cmd->add_option("-o,--output", g_output, "Output path ('-' for stdout)");
        if (with_format) {
            cmd->add_option("-f,--format", g_format, "Input format: csv or jsonl")
                ->default_str("csv");
        }
    };
    auto add_fit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon", fit_cfg.clamp_epsilon,
                        "Clamp observations into [eps, 1-eps] before fitting")
            ->default_str("1e-6");
        cmd->add_option("--max-iter", fit_cfg.max_iter, "Newton iteration cap")
            ->default_str("500");
        cmd->add_option("--grad-tol", fit_cfg.grad_tol, "Gradient inf-norm tolerance")
            ->default_str("1e-8");
        cmd->add_option("--shape-tol", shape_tol, "Shape boundary tolerance around 1")
            ->default_str("1e-9");
    };
    auto add_orientation = [&](CLI::App* cmd) {
        cmd->add_option("--positive", positive, "Positive class: imposter or client")
            ->default_str("imposter");
        cmd->add_option("--direction", direction,
                        "Predict positive when the score is low or high relative to t")
            ->default_str("low");
    };

    auto* cmd_fit = app.add_subcommand("fit", "Fit per-class maximum-likelihood betas");
    add_io(cmd_fit);
    add_fit_flags(cmd_fit);

    auto* cmd_analyze =
        app.add_subcommand("analyze", "Full fit + shape + ROC analysis as JSON");
    add_io(cmd_analyze);
    add_fit_flags(cmd_analyze);
    add_orientation(cmd_analyze);
    cmd_analyze->add_option("--grid", grid, "Theoretical ROC grid size")->default_str("1001");
    cmd_analyze->add_option("--thresholds", thresholds,
                            "Thresholds for per-threshold metrics (comma separated)")
        ->delimiter(',');

    auto* cmd_roc = app.add_subcommand("roc", "Emit ROC curve points as CSV");
    add_io(cmd_roc);
    add_fit_flags(cmd_roc);
    add_orientation(cmd_roc);
    cmd_roc->add_option("--kind", kind, "empirical, theoretical or both")->required();
    cmd_roc->add_option("--grid", grid, "Theoretical ROC grid size")->default_str("1001");

    auto* cmd_metrics = app.add_subcommand("metrics", "Threshold metrics as CSV");
    add_io(cmd_metrics);
    add_orientation(cmd_metrics);
    cmd_metrics->add_option("--thresholds", thresholds, "Thresholds (comma separated)")
        ->delimiter(',')
        ->required();

    auto* cmd_synth = app.add_subcommand("synth", "Generate a seeded synthetic dataset");
    cmd_synth->add_option("-o,--output", g_output, "Output path ('-' for stdout)");
    cmd_synth->add_option("--alpha1", p_a1, "Client alpha")->required();
    cmd_synth->add_option("--beta1", p_b1, "Client beta")->required();
    cmd_synth->add_option("--alpha2", p_a2, "Imposter alpha")->required();
    cmd_synth->add_option("--beta2", p_b2, "Imposter beta")->required();
    cmd_synth->add_option("--n-clients", n_clients, "Client sample size")->default_str("1000");
    cmd_synth->add_option("--n-imposters", n_imposters, "Imposter sample size")
        ->default_str("1000");
    cmd_synth->add_option("--seed", seed, "64-bit seed")->default_str("0");

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Dense parameter-space sweep; analytic shape/extremal/AUC per cell");
    cmd_sweep->add_option("-o,--output", g_output, "Output path ('-' for stdout)");
    cmd_sweep->add_option("--alpha1", ax_a1, "Axis values 'v1,v2' or 'start:stop:step'")
        ->required();
    cmd_sweep->add_option("--beta1", ax_b1, "Axis values")->required();
    cmd_sweep->add_option("--alpha2", ax_a2, "Axis values")->required();
    cmd_sweep->add_option("--beta2", ax_b2, "Axis values")->required();
    cmd_sweep->add_option("--seed", seed, "64-bit seed")->default_str("0");
    cmd_sweep->add_option("--n-per-cell", n_per_cell,
                          "Per-class sample size for the fit round-trip (0 = analytic only)")
        ->default_str("0");

    auto* cmd_plot = app.add_subcommand("plot", "Render density or ROC SVG figures");
    add_io(cmd_plot);
    add_fit_flags(cmd_plot);
    add_orientation(cmd_plot);
    cmd_plot->add_option("--kind", kind, "density or roc")->required();
    cmd_plot->add_option("--report", report_path, "Analysis report JSON (kind=roc)");
    cmd_plot->add_option("--bins", bins, "Histogram bins")->default_str("20");
    cmd_plot->add_option("--grid", grid, "Theoretical ROC grid size")->default_str("1001");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        const RocOrientation orientation = parse_orientation(positive, direction);
        AnalysisOptions options;
        options.fit = fit_cfg;
        options.shape_tol = shape_tol;
        options.roc_grid = grid;
        options.orientation = orientation;
        options.thresholds = thresholds;

        if (cmd_fit->parsed()) return run_fit(fit_cfg, shape_tol);
        if (cmd_analyze->parsed()) return run_analyze(options);
        if (cmd_roc->parsed()) return run_roc(kind, grid, fit_cfg, orientation);
        if (cmd_metrics->parsed()) return run_metrics(thresholds, orientation);
        if (cmd_synth->parsed())
            return run_synth(p_a1, p_b1, p_a2, p_b2, n_clients, n_imposters, seed);
        if (cmd_sweep->parsed()) return run_sweep(ax_a1, ax_b1, ax_a2, ax_b2, seed, n_per_cell);
        if (cmd_plot->parsed())
            return run_plot(kind, report_path, bins, grid, fit_cfg, orientation);
    } catch (const ParseError& e) {
        std::cerr << "betaroc: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "betaroc: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "betaroc: " << e.what() << '\n';
        return kInputError;
    } catch (const FitError& e) {
        std::cerr << "betaroc: " << e.what() << '\n';
        return kFitFailure;
    }
    return kOk;
}
