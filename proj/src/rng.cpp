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

#include "betaroc/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace betaroc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Seed derive_subseed(Seed seed, std::uint64_t index, std::uint64_t stream) {
    return mix64(mix64(seed + kGolden * (index + 1)) ^ mix64(kGolden * (2 * stream + 1)));
}

Xoshiro256::Xoshiro256(Seed seed) {
    // SplitMix64 expansion; guarantees a nonzero state for any seed.
    std::uint64_t s = seed;
    for (auto& word : state_) {
        s += kGolden;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        word = z ^ (z >> 31);
    }
}

std::uint64_t Xoshiro256::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256::next_u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256::next_normal() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_u01() - 1.0;
        v = 2.0 * next_u01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    have_spare_normal_ = true;
    return u * m;
}

double Xoshiro256::next_gamma(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw std::domain_error("next_gamma: shape must be positive and finite");
    }
    if (shape < 1.0) {
        // Boost a sub-1 shape through Gamma(shape + 1).
        const double g = next_gamma(shape + 1.0);
        double u;
        do {
            u = next_u01();
        } while (u == 0.0);
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_u01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Xoshiro256::next_beta(double a, double b) {
    const double g1 = next_gamma(a);
    const double g2 = next_gamma(b);
    const double sum = g1 + g2;
    double x = sum > 0.0 ? g1 / sum : 0.5;
    // Keep strictly inside (0,1); underflow to an exact endpoint is possible
    // for very small shapes.
    constexpr double kLo = std::numeric_limits<double>::min();
    constexpr double kHi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    if (x < kLo) x = kLo;
    if (x > kHi) x = kHi;
    return x;
}

} // namespace betaroc
