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

#include "betaroc/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace betaroc {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640562;

void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(fn) + ": argument must be positive and finite, got " +
                                std::to_string(x));
    }
}

// Godfrey's Lanczos coefficients for g = 7, n = 9; relative error below
// 2e-15 over the positive real axis once reflection handles x < 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5.
    const double z = x - 1.0;
    double sum = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        sum += kLanczos[k] / (z + k);
    }
    const double t = z + 7.5;
    return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// Continued fraction for I_x(a,b), Lentz's method with the usual rescue
// constant. Assumes 0 < x < 1 and x <= (a+1)/(a+b+2).
double inc_beta_cf(double x, double a, double b) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-16;
    constexpr int kMaxIter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        // Even step.
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        // Odd step.
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x >= 0.5) {
        return log_gamma_lanczos(x);
    }
    // Reflection: ln Gamma(x) = ln(pi / sin(pi x)) - ln Gamma(1 - x).
    return std::log(kPi / std::sin(kPi * x)) - log_gamma_lanczos(1.0 - x);
}

double log_beta(double a, double b) {
    require_positive(a, "log_beta");
    require_positive(b, "log_beta");
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double result = 0.0;
    // Shift the argument above 10 where the asymptotic series is accurate.
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli series: ln x - 1/(2x) - sum B_2n / (2n x^2n).
    double series = inv2 * (1.0 / 12.0 +
                    inv2 * (-1.0 / 120.0 +
                    inv2 * (1.0 / 252.0 +
                    inv2 * (-1.0 / 240.0 +
                    inv2 * (1.0 / 132.0 +
                    inv2 * (-691.0 / 32760.0))))));
    result += std::log(x) - 0.5 * inv - series;
    return result;
}

double trigamma(double x) {
    require_positive(x, "trigamma");
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // psi'(x) ~ 1/x + 1/(2x^2) + sum B_2n / x^(2n+1).
    double series = 1.0 +
                    inv * 0.5 +
                    inv2 * (1.0 / 6.0 +
                    inv2 * (-1.0 / 30.0 +
                    inv2 * (1.0 / 42.0 +
                    inv2 * (-1.0 / 30.0 +
                    inv2 * (5.0 / 66.0 +
                    inv2 * (-691.0 / 2730.0))))));
    result += inv * series;
    return result;
}

double reg_inc_beta(double x, double a, double b) {
    require_positive(a, "reg_inc_beta");
    require_positive(b, "reg_inc_beta");
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("reg_inc_beta: x must lie in [0,1], got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x <= (a + 1.0) / (a + b + 2.0)) {
        return front * inc_beta_cf(x, a, b) / a;
    }
    return 1.0 - front * inc_beta_cf(1.0 - x, b, a) / b;
}

} // namespace betaroc
