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

#include "betaroc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "betaroc/special_functions.hpp"

namespace betaroc {

namespace {

void require_finite_scores(const std::vector<double>& scores, const char* what) {
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw InputError(std::string(what) + ": scores must be finite");
        }
    }
}

void require_nonempty(const std::vector<double>& scores, const char* what, const char* cls) {
    if (scores.empty()) {
        throw InputError(std::string(what) + ": " + cls + " scores are empty");
    }
    require_finite_scores(scores, what);
}

// Normalized view of the two classes under an orientation: `neg`/`pos`
// are the negative/positive classes, scores negated when positive means
// "score >= threshold" so that the sweep below can always use <=.
struct OrientedScores {
    std::vector<double> neg;
    std::vector<double> pos;
};

OrientedScores orient_scores(const std::vector<double>& clients,
                             const std::vector<double>& imposters, RocOrientation o) {
    OrientedScores s;
    s.neg = o.imposter_positive ? clients : imposters;
    s.pos = o.imposter_positive ? imposters : clients;
    if (!o.positive_below) {
        for (double& v : s.neg) v = -v;
        for (double& v : s.pos) v = -v;
    }
    return s;
}

FitResult mirror(const FitResult& r) {
    FitResult m = r;
    m.params = BetaParams(r.params.beta, r.params.alpha);
    m.initializer = BetaParams(r.initializer.beta, r.initializer.alpha);
    return m;
}

// Tanh-sinh quadrature of f over (0, 1); f must be bounded. Doubles the
// node density per level until the estimate settles.
template <typename F>
double tanh_sinh_01(F&& f, double tol, int max_level = 9) {
    constexpr double kHalfPi = 1.57079632679489661923;
    constexpr double kTMax = 6.8; // weights underflow beyond this

    auto node = [&](double t, double& x, double& w) {
        const double s = kHalfPi * std::sinh(t);
        x = 0.5 * (1.0 + std::tanh(s));
        const double c = std::cosh(s);
        w = kHalfPi * 0.5 * std::cosh(t) / (c * c);
    };

    auto accumulate = [&](double t, double& acc) {
        double x, w;
        node(t, x, w);
        if (w > 0.0 && x > 0.0 && x < 1.0) acc += f(x) * w;
    };

    // Base level: all integer abscissas.
    double h = 1.0;
    double x, w;
    node(0.0, x, w);
    double sum = f(x) * w;
    for (double t = 1.0; t <= kTMax; t += 1.0) {
        accumulate(t, sum);
        accumulate(-t, sum);
    }
    double prev = sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // Refinement adds the odd multiples of the new step.
        for (double t = h; t <= kTMax; t += 2.0 * h) {
            accumulate(t, sum);
            accumulate(-t, sum);
        }
        const double estimate = sum * h;
        if (level >= 3 && std::fabs(estimate - prev) <= tol) return estimate;
        prev = estimate;
    }
    return prev;
}

} // namespace

const char* to_string(SlopeLimit s) {
    switch (s) {
        case SlopeLimit::Zero: return "zero";
        case SlopeLimit::FinitePositive: return "finite";
        case SlopeLimit::Infinite: return "infinite";
    }
    return "?";
}

SlopeLimit slope_limit_from_string(const std::string& s) {
    for (SlopeLimit v : {SlopeLimit::Zero, SlopeLimit::FinitePositive, SlopeLimit::Infinite}) {
        if (s == to_string(v)) return v;
    }
    throw std::domain_error("unknown slope limit '" + s + "'");
}

FittedPair orient(const FittedPair& pair, RocOrientation o) {
    FittedPair p = o.imposter_positive ? pair : FittedPair{pair.imposter, pair.client};
    if (!o.positive_below) {
        p = FittedPair{mirror(p.client), mirror(p.imposter)};
    }
    return p;
}

RocCurve empirical_roc(const std::vector<double>& clients, const std::vector<double>& imposters,
                       RocOrientation o) {
    require_nonempty(clients, "empirical_roc", "client");
    require_nonempty(imposters, "empirical_roc", "imposter");
    OrientedScores s = orient_scores(clients, imposters, o);
    std::sort(s.neg.begin(), s.neg.end());
    std::sort(s.pos.begin(), s.pos.end());

    std::vector<double> thresholds;
    thresholds.reserve(s.neg.size() + s.pos.size());
    thresholds.insert(thresholds.end(), s.neg.begin(), s.neg.end());
    thresholds.insert(thresholds.end(), s.pos.begin(), s.pos.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    RocCurve curve{{{0.0, 0.0}}, RocCurve::Kind::Empirical};
    const double n_neg = static_cast<double>(s.neg.size());
    const double n_pos = static_cast<double>(s.pos.size());
    std::size_t i_neg = 0, i_pos = 0;
    for (double t : thresholds) {
        while (i_neg < s.neg.size() && s.neg[i_neg] <= t) ++i_neg;
        while (i_pos < s.pos.size() && s.pos[i_pos] <= t) ++i_pos;
        curve.points.push_back({static_cast<double>(i_neg) / n_neg,
                                static_cast<double>(i_pos) / n_pos});
    }
    return curve;
}

double empirical_auc(const std::vector<double>& clients, const std::vector<double>& imposters,
                     RocOrientation o) {
    require_nonempty(clients, "empirical_auc", "client");
    require_nonempty(imposters, "empirical_auc", "imposter");
    OrientedScores s = orient_scores(clients, imposters, o);

    // Midrank Mann-Whitney: AUC = P(neg > pos) + P(neg == pos) / 2.
    struct Tagged {
        double score;
        bool is_neg;
    };
    std::vector<Tagged> all;
    all.reserve(s.neg.size() + s.pos.size());
    for (double v : s.neg) all.push_back({v, true});
    for (double v : s.pos) all.push_back({v, false});
    std::sort(all.begin(), all.end(),
              [](const Tagged& a, const Tagged& b) { return a.score < b.score; });

    double rank_sum_neg = 0.0;
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].score == all[i].score) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j); // ranks are 1-based
        for (std::size_t k = i; k < j; ++k) {
            if (all[k].is_neg) rank_sum_neg += midrank;
        }
        i = j;
    }
    const double n_neg = static_cast<double>(s.neg.size());
    const double n_pos = static_cast<double>(s.pos.size());
    const double u_neg = rank_sum_neg - n_neg * (n_neg + 1.0) / 2.0;
    return u_neg / (n_neg * n_pos);
}

double ks_statistic(const std::vector<double>& clients, const std::vector<double>& imposters) {
    require_nonempty(clients, "ks_statistic", "client");
    require_nonempty(imposters, "ks_statistic", "imposter");
    std::vector<double> c = clients, im = imposters;
    std::sort(c.begin(), c.end());
    std::sort(im.begin(), im.end());

    double best = 0.0;
    std::size_t ic = 0, ii = 0;
    while (ic < c.size() || ii < im.size()) {
        const double t = (ic < c.size() && (ii == im.size() || c[ic] <= im[ii])) ? c[ic] : im[ii];
        while (ic < c.size() && c[ic] <= t) ++ic;
        while (ii < im.size() && im[ii] <= t) ++ii;
        const double fc = static_cast<double>(ic) / static_cast<double>(c.size());
        const double fi = static_cast<double>(ii) / static_cast<double>(im.size());
        best = std::max(best, std::fabs(fi - fc));
    }
    return best;
}

RocCurve theoretical_roc(const FittedPair& pair, std::size_t grid) {
    if (grid < 2) {
        throw InputError("theoretical_roc: grid must contain at least 2 thresholds");
    }
    std::vector<double> thresholds;
    thresholds.reserve(grid + 198);
    for (std::size_t k = 0; k < grid; ++k) {
        thresholds.push_back(static_cast<double>(k) / static_cast<double>(grid - 1));
    }
    // Percentile points of both classes; J/U shapes move fastest near the
    // endpoints where a uniform grid undersamples.
    for (int j = 1; j <= 99; ++j) {
        thresholds.push_back(quantile(pair.client.params, j / 100.0));
        thresholds.push_back(quantile(pair.imposter.params, j / 100.0));
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    RocCurve curve{{}, RocCurve::Kind::Theoretical};
    curve.points.reserve(thresholds.size());
    for (double t : thresholds) {
        curve.points.push_back({cdf(pair.client.params, t), cdf(pair.imposter.params, t)});
    }
    return curve;
}

double roc_slope(const FittedPair& pair, double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("roc_slope: x must lie strictly inside (0,1); "
                                "use extremal_analysis for the endpoint limits");
    }
    const double da = pair.imposter.params.alpha - pair.client.params.alpha;
    const double db = pair.imposter.params.beta - pair.client.params.beta;
    return std::exp(da * std::log(x) + db * std::log1p(-x));
}

ExtremalReport extremal_analysis(const FittedPair& pair, double tol) {
    const double e0 = pair.client.params.alpha - pair.imposter.params.alpha;
    const double e1 = pair.imposter.params.beta - pair.client.params.beta;

    auto classify = [tol](double e, bool positive_means_infinite) {
        if (std::fabs(e) <= tol) return SlopeLimit::FinitePositive;
        if (e > 0.0) return positive_means_infinite ? SlopeLimit::Infinite : SlopeLimit::Zero;
        return positive_means_infinite ? SlopeLimit::Zero : SlopeLimit::Infinite;
    };

    ExtremalReport r{};
    // x^(a2-a1) as x -> 0+: infinite iff a1 > a2.
    r.slope_limit_at_0 = classify(e0, true);
    // (1-x)^(b2-b1) as x -> 1-: zero iff b2 > b1.
    r.slope_limit_at_1 = classify(e1, false);
    r.above_diagonal_near_0 = r.slope_limit_at_0 == SlopeLimit::Infinite;
    r.above_diagonal_near_1 = r.slope_limit_at_1 == SlopeLimit::Zero;
    r.exponent_at_0 = e0;
    r.exponent_at_1 = e1;
    return r;
}

ConfusionCounts confusion_counts(const std::vector<double>& clients,
                                 const std::vector<double>& imposters, double threshold,
                                 RocOrientation o) {
    require_finite_scores(clients, "confusion_counts");
    require_finite_scores(imposters, "confusion_counts");
    const std::vector<double>& pos = o.imposter_positive ? imposters : clients;
    const std::vector<double>& neg = o.imposter_positive ? clients : imposters;

    auto predicted_positive = [&](double score) {
        return o.positive_below ? score <= threshold : score >= threshold;
    };

    ConfusionCounts c;
    for (double s : pos) {
        if (predicted_positive(s)) ++c.tp;
        else ++c.fn;
    }
    for (double s : neg) {
        if (predicted_positive(s)) ++c.fp;
        else ++c.tn;
    }
    return c;
}

ThresholdMetrics threshold_metrics(const std::vector<double>& clients,
                                   const std::vector<double>& imposters, double threshold,
                                   RocOrientation o) {
    ThresholdMetrics m;
    m.threshold = threshold;
    m.counts = confusion_counts(clients, imposters, threshold, o);
    const auto& c = m.counts;

    m.tpr_defined = c.tp + c.fn > 0;
    if (m.tpr_defined) {
        m.tpr = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    m.ppv_defined = c.tp + c.fp > 0;
    if (m.ppv_defined) {
        m.ppv = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    }
    m.f1_defined = m.tpr_defined && m.ppv_defined;
    if (m.f1_defined) {
        m.f1 = (m.tpr + m.ppv > 0.0) ? 2.0 * m.tpr * m.ppv / (m.tpr + m.ppv) : 0.0;
    }
    return m;
}

double roc_area(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        const auto& a = curve.points[k - 1];
        const auto& b = curve.points[k];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

double theoretical_auc(const FittedPair& pair) {
    const BetaParams& c = pair.client.params;
    const BetaParams& i = pair.imposter.params;
    // P(C > I) = integral of F_i(F_c^{-1}(u)) du over (0,1); the probability
    // transform keeps the integrand bounded for every shape combination.
    auto integrand = [&](double u) { return cdf(i, quantile(c, u)); };
    return tanh_sinh_01(integrand, 1e-10);
}

} // namespace betaroc
