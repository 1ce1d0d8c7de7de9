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

#include "betaroc/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "betaroc/special_functions.hpp"

namespace betaroc {

namespace {

struct SufficientStats {
    double n;
    double sum_log_x;      // sum ln x_i
    double sum_log_1mx;    // sum ln(1 - x_i)
};

double log_likelihood(const SufficientStats& s, double alpha, double beta) {
    return (alpha - 1.0) * s.sum_log_x + (beta - 1.0) * s.sum_log_1mx -
           s.n * log_beta(alpha, beta);
}

struct Gradient {
    double d_alpha;
    double d_beta;
    double inf_norm() const { return std::max(std::fabs(d_alpha), std::fabs(d_beta)); }
};

Gradient gradient(const SufficientStats& s, double alpha, double beta) {
    const double psi_sum = digamma(alpha + beta);
    return {s.sum_log_x - s.n * (digamma(alpha) - psi_sum),
            s.sum_log_1mx - s.n * (digamma(beta) - psi_sum)};
}

double clamp_param(double v, const FitConfig& cfg) {
    return std::clamp(v, cfg.param_floor, cfg.param_ceiling);
}

} // namespace

void FitConfig::validate() const {
    if (!(clamp_epsilon > 0.0 && clamp_epsilon <= 0.01)) {
        throw InputError("FitConfig: clamp_epsilon must lie in (0, 0.01]");
    }
    if (max_iter < 1) throw InputError("FitConfig: max_iter must be >= 1");
    if (!(param_floor > 0.0 && param_floor < param_ceiling)) {
        throw InputError("FitConfig: param_floor must be positive and below param_ceiling");
    }
    if (!(grad_tol > 0.0)) throw InputError("FitConfig: grad_tol must be positive");
}

double beta_log_likelihood(const BetaParams& p, const std::vector<double>& sample) {
    SufficientStats s{static_cast<double>(sample.size()), 0.0, 0.0};
    for (double x : sample) {
        if (!(x > 0.0 && x < 1.0)) {
            throw InputError("beta_log_likelihood: values must lie in (0,1)");
        }
        s.sum_log_x += std::log(x);
        s.sum_log_1mx += std::log1p(-x);
    }
    return log_likelihood(s, p.alpha, p.beta);
}

BetaParams mom_init(const std::vector<double>& sample, double param_floor,
                    double param_ceiling) {
    if (sample.size() < 2) {
        throw FitError("mom_init: sample must contain at least 2 values");
    }
    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(sample.size());

    double var = 0.0;
    for (double x : sample) var += (x - mean) * (x - mean);
    var /= static_cast<double>(sample.size());

    if (var <= 0.0) {
        throw DegenerateSampleError("mom_init: sample variance is zero");
    }
    if (!(mean > 0.0 && mean < 1.0)) {
        throw FitError("mom_init: sample mean must lie strictly inside (0,1)");
    }
    const double c = mean * (1.0 - mean) / var - 1.0;
    if (c <= 0.0) {
        throw OverdispersedSampleError(
            "mom_init: sample variance exceeds the Bernoulli bound m(1-m)");
    }
    return {std::clamp(mean * c, param_floor, param_ceiling),
            std::clamp((1.0 - mean) * c, param_floor, param_ceiling)};
}

FitResult fit_mle(const std::vector<double>& sample, const FitConfig& cfg) {
    cfg.validate();
    if (sample.size() < 2) {
        throw FitError("fit_mle: sample must contain at least 2 values");
    }

    const double eps = cfg.clamp_epsilon;
    std::vector<double> clamped;
    clamped.reserve(sample.size());
    std::size_t n_clamped = 0;
    for (double x : sample) {
        if (!std::isfinite(x)) {
            throw InputError("fit_mle: sample contains a non-finite value");
        }
        double c = std::clamp(x, eps, 1.0 - eps);
        if (c != x) ++n_clamped;
        clamped.push_back(c);
    }
    const bool all_equal =
        std::all_of(clamped.begin(), clamped.end(), [&](double v) { return v == clamped.front(); });
    if (all_equal) {
        throw FitError("fit_mle: all observations are equal after clamping");
    }

    // The sample enters only through its sums; summing in sorted order makes
    // the result bit-identical under permutation of the input.
    std::sort(clamped.begin(), clamped.end());

    SufficientStats stats{static_cast<double>(clamped.size()), 0.0, 0.0};
    for (double x : clamped) {
        stats.sum_log_x += std::log(x);
        stats.sum_log_1mx += std::log1p(-x);
    }

    BetaParams init = [&] {
        try {
            return mom_init(clamped, cfg.param_floor, cfg.param_ceiling);
        } catch (const OverdispersedSampleError&) {
            return BetaParams(1.0, 1.0); // maximum-entropy fallback
        }
    }();

    double alpha = init.alpha;
    double beta = init.beta;
    double ll = log_likelihood(stats, alpha, beta);

    double best_alpha = alpha, best_beta = beta, best_ll = ll;
    int iterations = 0;
    bool reached_tol = false;

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const Gradient g = gradient(stats, alpha, beta);
        if (g.inf_norm() <= cfg.grad_tol) {
            reached_tol = true;
            break;
        }

        // Newton direction on (u, v) = (ln alpha, ln beta).
        const double tri_sum = trigamma(alpha + beta);
        const double h_aa = -stats.n * (trigamma(alpha) - tri_sum);
        const double h_bb = -stats.n * (trigamma(beta) - tri_sum);
        const double h_ab = stats.n * tri_sum;
        const double grad_u = alpha * g.d_alpha;
        const double grad_v = beta * g.d_beta;
        const double huu = grad_u + alpha * alpha * h_aa;
        const double hvv = grad_v + beta * beta * h_bb;
        const double huv = alpha * beta * h_ab;

        double du, dv;
        const double det = huu * hvv - huv * huv;
        if (det > 0.0 && huu < 0.0) {
            du = -(hvv * grad_u - huv * grad_v) / det;
            dv = -(huu * grad_v - huv * grad_u) / det;
        } else {
            // Hessian not negative definite here; take a scaled ascent step.
            const double scale = 1.0 / std::max(1.0, std::max(std::fabs(grad_u), std::fabs(grad_v)));
            du = grad_u * scale;
            dv = grad_v * scale;
        }

        // Step halving until the log-likelihood is non-decreasing. Near the
        // optimum the true increase falls below one ulp of ll, so the
        // comparison allows rounding noise; without that slack the search
        // stalls just above the gradient tolerance.
        const double noise = (std::fabs(ll) + 1.0) * 1e-14;
        double step = 1.0;
        bool accepted = false;
        bool moved = false;
        for (int halving = 0; halving < 60; ++halving) {
            const double cand_alpha = clamp_param(alpha * std::exp(step * du), cfg);
            const double cand_beta = clamp_param(beta * std::exp(step * dv), cfg);
            const double cand_ll = log_likelihood(stats, cand_alpha, cand_beta);
            if (cand_ll >= ll - noise) {
                moved = cand_alpha != alpha || cand_beta != beta;
                alpha = cand_alpha;
                beta = cand_beta;
                ll = cand_ll;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        ++iterations;
        if (ll >= best_ll) {
            best_ll = ll;
            best_alpha = alpha;
            best_beta = beta;
        }
        if (!accepted || !moved) break; // at this scale the iterate is a fixed point
    }

    if (reached_tol) {
        // The current iterate met the gradient tolerance. Its likelihood can
        // trail the best recorded one by rounding noise only.
        return FitResult{BetaParams(alpha, beta), ll, iterations, true, init, n_clamped};
    }
    const bool converged =
        gradient(stats, best_alpha, best_beta).inf_norm() <= cfg.grad_tol;
    return FitResult{BetaParams(best_alpha, best_beta),
                     best_ll,
                     iterations,
                     converged,
                     init,
                     n_clamped};
}

FittedPair fit_pair(const std::vector<double>& clients, const std::vector<double>& imposters,
                    const FitConfig& cfg) {
    auto fit_class = [&](const std::vector<double>& sample, const char* label) {
        try {
            return fit_mle(sample, cfg);
        } catch (const InputError& e) {
            throw InputError(std::string(label) + ": " + e.what());
        } catch (const FitError& e) {
            throw FitError(std::string(label) + ": " + e.what());
        }
    };
    return FittedPair{fit_class(clients, "client"), fit_class(imposters, "imposter")};
}

} // namespace betaroc
