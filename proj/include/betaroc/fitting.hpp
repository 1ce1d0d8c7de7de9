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

#ifndef BETAROC_FITTING_HPP
#define BETAROC_FITTING_HPP

#include <cstddef>
#include <vector>

#include "betaroc/beta_distribution.hpp"
#include "betaroc/errors.hpp"

namespace betaroc {

/// Raised by mom_init when the sample variance is zero.
class DegenerateSampleError : public FitError {
public:
    using FitError::FitError;
};

/// Raised by mom_init when the variance exceeds the Bernoulli bound
/// m(1-m), so the moment equations have no positive solution.
class OverdispersedSampleError : public FitError {
public:
    using FitError::FitError;
};

struct FitConfig {
    double clamp_epsilon = 1e-6;  // observations clamped into [eps, 1-eps]
    double grad_tol = 1e-8;       // inf-norm of the log-likelihood gradient
    int max_iter = 500;
    double param_floor = 1e-6;
    double param_ceiling = 1e6;

    void validate() const;
};

struct FitResult {
    BetaParams params{1.0, 1.0};
    double log_likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
    BetaParams initializer{1.0, 1.0}; // method-of-moments start
    std::size_t n_clamped = 0;        // observations moved to the clamp boundary
};

/// Client (alpha1, beta1) and imposter (alpha2, beta2) fits.
struct FittedPair {
    FitResult client;
    FitResult imposter;
};

/// Beta log-likelihood of a sample with values in (0, 1):
/// (alpha-1) sum ln x + (beta-1) sum ln(1-x) - n ln B(alpha, beta).
double beta_log_likelihood(const BetaParams& p, const std::vector<double>& sample);

/// Method-of-moments initializer. With m the sample mean, v the population
/// (divisor n) variance and c = m(1-m)/v - 1, returns (m*c, (1-m)*c)
/// clamped into [param_floor, param_ceiling].
BetaParams mom_init(const std::vector<double>& sample,
                    double param_floor = 1e-6, double param_ceiling = 1e6);

/// Maximum-likelihood fit by Newton's method on (ln alpha, ln beta) with
/// step halving, started from mom_init (or (1,1) when the sample is
/// overdispersed). Non-convergence returns the best iterate with
/// converged = false rather than throwing.
FitResult fit_mle(const std::vector<double>& sample, const FitConfig& cfg = {});

/// Fits both classes; errors are rethrown labelled "client:" / "imposter:".
FittedPair fit_pair(const std::vector<double>& clients,
                    const std::vector<double>& imposters, const FitConfig& cfg = {});

} // namespace betaroc

#endif // BETAROC_FITTING_HPP
