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

#ifndef BETAROC_ANALYSIS_HPP
#define BETAROC_ANALYSIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "betaroc/fitting.hpp"

namespace betaroc {

// Default ROC orientation: the imposter class is the positive one and a
// score is predicted positive when it falls at or below the threshold, so
// TPR(t) = F_imposter(t) and FPR(t) = F_client(t). Both choices can be
// transposed.
struct RocOrientation {
    bool imposter_positive = true;
    bool positive_below = true; // predict positive when score <= threshold
};

/// Rewrites a fitted pair so that the default-convention operations below
/// realize the requested orientation: swaps the classes when the client is
/// the positive one, and mirrors each distribution (alpha <-> beta, the law
/// of 1 - X) when positive means "score >= threshold".
FittedPair orient(const FittedPair& pair, RocOrientation o);

struct RocPoint {
    double fpr;
    double tpr;
};

struct RocCurve {
    enum class Kind { Empirical, Theoretical };
    std::vector<RocPoint> points; // starts at (0,0), ends at (1,1), monotone
    Kind kind;
};

/// Threshold sweep over all distinct scores; stepwise curve through (0,0)
/// and (1,1). Throws InputError when either class is empty.
RocCurve empirical_roc(const std::vector<double>& clients,
                       const std::vector<double>& imposters,
                       RocOrientation o = {});

/// Mann-Whitney AUC with the 0.5 tie convention; identical to the
/// trapezoidal area under empirical_roc.
double empirical_auc(const std::vector<double>& clients,
                     const std::vector<double>& imposters,
                     RocOrientation o = {});

/// Two-sample Kolmogorov-Smirnov distance between the class score CDFs.
double ks_statistic(const std::vector<double>& clients,
                    const std::vector<double>& imposters);

/// Theoretical curve (F_client(t), F_imposter(t)) on `grid` uniform
/// thresholds merged with both classes' percentile points (grid >= 2).
RocCurve theoretical_roc(const FittedPair& pair, std::size_t grid = 1001);

/// Slope kernel of the theoretical ROC curve at interior threshold x:
/// x^(alpha2 - alpha1) (1 - x)^(beta2 - beta1), where 1 = client and
/// 2 = imposter. This is the curve derivative up to the constant factor
/// B(alpha1, beta1) / B(alpha2, beta2); the factor does not affect the
/// zero/infinite limit classification at the endpoints.
double roc_slope(const FittedPair& pair, double x);

enum class SlopeLimit { Zero, FinitePositive, Infinite };

const char* to_string(SlopeLimit s);
SlopeLimit slope_limit_from_string(const std::string& s);

/// Endpoint behaviour of the theoretical ROC curve.
struct ExtremalReport {
    SlopeLimit slope_limit_at_0;
    SlopeLimit slope_limit_at_1;
    bool above_diagonal_near_0; // iff slope limit at 0 is Infinite
    bool above_diagonal_near_1; // iff slope limit at 1 is Zero
    double exponent_at_0;       // alpha1 - alpha2; positive -> Infinite at 0
    double exponent_at_1;       // beta2 - beta1;  positive -> Zero at 1
};

/// Classifies the semi-derivative limits at both endpoints from the
/// exponent signs; exponents within `tol` of zero give FinitePositive.
ExtremalReport extremal_analysis(const FittedPair& pair, double tol = 1e-9);

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
};

struct ThresholdMetrics {
    double threshold;
    ConfusionCounts counts;
    double tpr = 0.0;
    double ppv = 0.0;
    double f1 = 0.0;
    bool tpr_defined = false;
    bool ppv_defined = false; // false when tp + fp == 0
    bool f1_defined = false;
};

ConfusionCounts confusion_counts(const std::vector<double>& clients,
                                 const std::vector<double>& imposters, double threshold,
                                 RocOrientation o = {});

/// TPR, PPV and F1 at a fixed threshold; PPV/F1 are flagged undefined when
/// no sample is predicted positive.
ThresholdMetrics threshold_metrics(const std::vector<double>& clients,
                                   const std::vector<double>& imposters, double threshold,
                                   RocOrientation o = {});

/// Trapezoidal area under a ROC curve.
double roc_area(const RocCurve& curve);

/// P(client response > imposter response) for the fitted pair, i.e. the
/// area under the theoretical curve. Tanh-sinh quadrature in the
/// probability domain, absolute error well under 1e-8.
double theoretical_auc(const FittedPair& pair);

} // namespace betaroc

#endif // BETAROC_ANALYSIS_HPP
