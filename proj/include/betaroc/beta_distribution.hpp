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

#ifndef BETAROC_BETA_DISTRIBUTION_HPP
#define BETAROC_BETA_DISTRIBUTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "betaroc/rng.hpp"

namespace betaroc {

/// Shape parameters of a beta distribution. Immutable value type; the
/// constructor enforces alpha, beta > 0 and finite.
struct BetaParams {
    double alpha;
    double beta;

    BetaParams(double alpha_, double beta_);
};

/// Density shape taxonomy. A parameter within `tol` of 1 is treated as
/// sitting on the taxonomy boundary, which yields one of the five
/// boundary (singular) classes instead of Bell/U/J/ReverseJ.
enum class FineShape {
    Bell,                  // alpha > 1, beta > 1
    U,                     // alpha < 1, beta < 1
    J,                     // alpha < 1 < beta (spike at the left endpoint)
    ReverseJ,              // beta < 1 < alpha (spike at the right endpoint)
    Uniform,               // alpha = beta = 1
    IncreasingLinearLike,  // beta = 1, alpha > 1
    DecreasingLinearLike,  // alpha = 1, beta > 1
    LeftBoundary,          // beta = 1, alpha < 1 (diverges at 0 only)
    RightBoundary,         // alpha = 1, beta < 1 (diverges at 1 only)
};

enum class CoarseShape { Bell, U, JFamily, Singular };

struct ShapeClass {
    FineShape fine;
    CoarseShape coarse;
    /// Exact alpha == beta symmetry, reported informationally; it does not
    /// affect the class.
    bool symmetric;
};

const char* to_string(FineShape s);
const char* to_string(CoarseShape s);
FineShape fine_shape_from_string(const std::string& s);
CoarseShape coarse_shape_from_string(const std::string& s);

/// Density x^(alpha-1) (1-x)^(beta-1) / B(alpha, beta) on [0, 1].
/// At an endpoint where the corresponding exponent is negative the density
/// diverges and +infinity is returned; the finite limit otherwise.
/// Throws std::domain_error outside [0, 1].
double pdf(const BetaParams& p, double x);

/// Regularized incomplete beta I_x(alpha, beta); cdf(0) = 0, cdf(1) = 1.
double cdf(const BetaParams& p, double x);

/// Inverse CDF by bracketed bisection polished with Newton steps;
/// |cdf(result) - q| <= 1e-10. quantile(0) = 0 and quantile(1) = 1.
double quantile(const BetaParams& p, double q);

struct Moments {
    double mean;
    double variance;
};

/// mean = a/(a+b), variance = ab / ((a+b)^2 (a+b+1)).
Moments moments(const BetaParams& p);

/// Classify the density shape; parameters within `tol` of 1 are boundary
/// cases. Total for every valid BetaParams.
ShapeClass classify_shape(const BetaParams& p, double tol = 1e-9);

/// n i.i.d. variates from the fixed xoshiro256++ / Marsaglia-Tsang sampler;
/// same (params, n, seed) gives an identical sequence on every platform.
std::vector<double> sample(const BetaParams& p, std::size_t n, Seed seed);

} // namespace betaroc

#endif // BETAROC_BETA_DISTRIBUTION_HPP
