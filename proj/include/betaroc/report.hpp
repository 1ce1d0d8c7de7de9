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

#ifndef BETAROC_REPORT_HPP
#define BETAROC_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "betaroc/analysis.hpp"
#include "betaroc/ingest.hpp"

namespace betaroc {

struct AnalysisOptions {
    FitConfig fit;
    double shape_tol = 1e-9;
    std::size_t roc_grid = 1001;
    RocOrientation orientation;
    std::vector<double> thresholds; // optional per-threshold metrics
};

struct ClassReport {
    FitResult fit;
    ShapeClass shape;
};

/// Everything the analyze pipeline produces for one dataset. Serialization
/// is deterministic: fixed key order, doubles at 17 significant digits and
/// no timestamps, so identical inputs give identical bytes.
struct AnalysisReport {
    int schema_version = 1;
    std::string tool_version;
    std::string source;
    std::size_t n_clients = 0;
    std::size_t n_imposters = 0;
    std::size_t n_snapped = 0;
    AnalysisOptions options;
    ClassReport client;
    ClassReport imposter;
    ExtremalReport extremal;
    double empirical_auc = 0.0;
    double theoretical_auc = 0.0;
    double ks = 0.0;
    std::vector<ThresholdMetrics> threshold_metrics;
};

/// Runs fit -> shape -> extremal -> AUC/KS on labelled scores.
/// Hard fit errors propagate; non-convergence is reported in the result.
AnalysisReport make_report(const LabeledScores& scores, const AnalysisOptions& options = {});

std::string to_json(const AnalysisReport& report);

/// Inverse of to_json; throws InputError on malformed or wrong-schema input.
AnalysisReport report_from_json(const std::string& text);

/// Twenty-bin style histogram with the fitted density overlaid, as a
/// standalone SVG document. The overlay is clipped at the 99.5th
/// percentile of the plotted density values so diverging J/U shapes do
/// not flatten the plot.
std::string plot_density(const std::vector<double>& scores, const BetaParams& fit,
                         std::size_t bins = 20, const std::string& title = "");

/// Empirical and theoretical ROC curves plus the no-discrimination
/// diagonal on one axes, as a standalone SVG document.
std::string plot_roc(const RocCurve& empirical, const RocCurve& theoretical,
                     const std::string& title = "");

/// Theoretical curve only (used when plotting from a saved report, where
/// the raw scores are no longer available).
std::string plot_roc_theoretical(const RocCurve& theoretical, const std::string& title = "");

} // namespace betaroc

#endif // BETAROC_REPORT_HPP
