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

#include "betaroc/beta_distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "betaroc/special_functions.hpp"

namespace betaroc {

BetaParams::BetaParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || !(beta > 0.0) || !std::isfinite(beta)) {
        throw std::domain_error("BetaParams: alpha and beta must be positive and finite");
    }
}

const char* to_string(FineShape s) {
    switch (s) {
        case FineShape::Bell: return "bell";
        case FineShape::U: return "u";
        case FineShape::J: return "j";
        case FineShape::ReverseJ: return "reverse_j";
        case FineShape::Uniform: return "uniform";
        case FineShape::IncreasingLinearLike: return "increasing_linear";
        case FineShape::DecreasingLinearLike: return "decreasing_linear";
        case FineShape::LeftBoundary: return "left_boundary";
        case FineShape::RightBoundary: return "right_boundary";
    }
    return "?";
}

const char* to_string(CoarseShape s) {
    switch (s) {
        case CoarseShape::Bell: return "bell";
        case CoarseShape::U: return "u";
        case CoarseShape::JFamily: return "j_family";
        case CoarseShape::Singular: return "singular";
    }
    return "?";
}

FineShape fine_shape_from_string(const std::string& s) {
    for (FineShape f : {FineShape::Bell, FineShape::U, FineShape::J, FineShape::ReverseJ,
                        FineShape::Uniform, FineShape::IncreasingLinearLike,
                        FineShape::DecreasingLinearLike, FineShape::LeftBoundary,
                        FineShape::RightBoundary}) {
        if (s == to_string(f)) return f;
    }
    throw std::domain_error("unknown fine shape '" + s + "'");
}

CoarseShape coarse_shape_from_string(const std::string& s) {
    for (CoarseShape c :
         {CoarseShape::Bell, CoarseShape::U, CoarseShape::JFamily, CoarseShape::Singular}) {
        if (s == to_string(c)) return c;
    }
    throw std::domain_error("unknown coarse shape '" + s + "'");
}

double pdf(const BetaParams& p, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("pdf: x must lie in [0,1], got " + std::to_string(x));
    }
    if (x == 0.0) {
        if (p.alpha < 1.0) return std::numeric_limits<double>::infinity();
        if (p.alpha > 1.0) return 0.0;
        return std::exp(-log_beta(p.alpha, p.beta)); // finite limit 1/B(1, beta)
    }
    if (x == 1.0) {
        if (p.beta < 1.0) return std::numeric_limits<double>::infinity();
        if (p.beta > 1.0) return 0.0;
        return std::exp(-log_beta(p.alpha, p.beta));
    }
    return std::exp((p.alpha - 1.0) * std::log(x) + (p.beta - 1.0) * std::log1p(-x) -
                    log_beta(p.alpha, p.beta));
}

double cdf(const BetaParams& p, double x) {
    return reg_inc_beta(x, p.alpha, p.beta);
}

double quantile(const BetaParams& p, double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error("quantile: q must lie in [0,1], got " + std::to_string(q));
    }
    if (q == 0.0) return 0.0;
    if (q == 1.0) return 1.0;

    double lo = 0.0, hi = 1.0;
    // Mean as the starting point keeps Newton close for skewed shapes.
    double x = p.alpha / (p.alpha + p.beta);

    for (int iter = 0; iter < 200; ++iter) {
        const double f = cdf(p, x) - q;
        if (std::fabs(f) <= 1e-12) return x;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        // Newton step from the interior density; fall back to bisection when
        // it escapes the bracket or the density is degenerate.
        double next = std::numeric_limits<double>::quiet_NaN();
        if (x > 0.0 && x < 1.0) {
            const double d = pdf(p, x);
            if (std::isfinite(d) && d > 0.0) next = x - f / d;
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    return x;
}

Moments moments(const BetaParams& p) {
    const double s = p.alpha + p.beta;
    return {p.alpha / s, p.alpha * p.beta / (s * s * (s + 1.0))};
}

ShapeClass classify_shape(const BetaParams& p, double tol) {
    if (!(tol >= 0.0)) {
        throw std::domain_error("classify_shape: tol must be non-negative");
    }
    const bool a_on_boundary = std::fabs(p.alpha - 1.0) <= tol;
    const bool b_on_boundary = std::fabs(p.beta - 1.0) <= tol;
    const bool symmetric = p.alpha == p.beta;

    FineShape fine;
    if (a_on_boundary && b_on_boundary) {
        fine = FineShape::Uniform;
    } else if (a_on_boundary) {
        fine = p.beta > 1.0 ? FineShape::DecreasingLinearLike : FineShape::RightBoundary;
    } else if (b_on_boundary) {
        fine = p.alpha > 1.0 ? FineShape::IncreasingLinearLike : FineShape::LeftBoundary;
    } else if (p.alpha > 1.0 && p.beta > 1.0) {
        fine = FineShape::Bell;
    } else if (p.alpha < 1.0 && p.beta < 1.0) {
        fine = FineShape::U;
    } else if (p.alpha < 1.0) {
        fine = FineShape::J;
    } else {
        fine = FineShape::ReverseJ;
    }

    CoarseShape coarse;
    switch (fine) {
        case FineShape::Bell: coarse = CoarseShape::Bell; break;
        case FineShape::U: coarse = CoarseShape::U; break;
        case FineShape::J:
        case FineShape::ReverseJ: coarse = CoarseShape::JFamily; break;
        default: coarse = CoarseShape::Singular; break;
    }
    return {fine, coarse, symmetric};
}

std::vector<double> sample(const BetaParams& p, std::size_t n, Seed seed) {
    std::vector<double> out;
    out.reserve(n);
    Xoshiro256 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(rng.next_beta(p.alpha, p.beta));
    }
    return out;
}

} // namespace betaroc
