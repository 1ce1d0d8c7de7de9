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

#ifndef BETAROC_RNG_HPP
#define BETAROC_RNG_HPP

#include <cstdint>

namespace betaroc {

/// 64-bit seed; any value is valid.
using Seed = std::uint64_t;

/// SplitMix64 finalizer (Steele, Lea & Flood). Used both to expand seeds
/// into generator state and to derive decorrelated sub-stream seeds.
std::uint64_t mix64(std::uint64_t z);

/// Deterministic sub-stream seed for (parent seed, cell index, stream id).
/// derive_subseed(s, i, k) = mix64(mix64(s + GOLDEN*(i+1)) ^ mix64(GOLDEN*(2*k+1)))
/// with GOLDEN = 0x9E3779B97F4A7C15. Documented so sweeps are reproducible
/// independently of evaluation order.
Seed derive_subseed(Seed seed, std::uint64_t index, std::uint64_t stream);

/// xoshiro256++ (Blackman & Vigna), state seeded via SplitMix64.
/// Fixed algorithm, so identical seeds give identical streams everywhere.
class Xoshiro256 {
public:
    explicit Xoshiro256(Seed seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_u01();

    /// Standard normal via the Marsaglia polar method.
    double next_normal();

    /// Gamma(shape, 1). Marsaglia-Tsang squeeze for shape >= 1; for
    /// shape < 1 the boost x = Gamma(shape + 1) * u^(1/shape).
    double next_gamma(double shape);

    /// Beta(a, b) as g1 / (g1 + g2) from two gamma draws, nudged into the
    /// open interval (0, 1).
    double next_beta(double a, double b);

private:
    std::uint64_t state_[4];
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

} // namespace betaroc

#endif // BETAROC_RNG_HPP
