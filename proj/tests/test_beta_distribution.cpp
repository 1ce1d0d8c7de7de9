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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "table1.hpp"

using namespace betaroc;

TEST_SUITE("beta_distribution") {

TEST_CASE("BetaParams validates its invariants") {
    CHECK_THROWS_AS(BetaParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(BetaParams(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(BetaParams(std::numeric_limits<double>::infinity(), 1.0),
                    std::domain_error);
}

TEST_CASE("pdf closed forms") {
    CHECK(pdf(BetaParams(1, 1), 0.5) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pdf(BetaParams(2, 2), 0.5) == doctest::Approx(1.5).epsilon(1e-13));
    // B(2,5) = 1/30, so pdf(0.2) = 30 * 0.2 * 0.8^4.
    CHECK(pdf(BetaParams(2, 5), 0.2) == doctest::Approx(2.4576).epsilon(1e-12));
}

TEST_CASE("pdf endpoint behaviour") {
    CHECK(pdf(BetaParams(0.5, 2.0), 0.0) == std::numeric_limits<double>::infinity());
    CHECK(pdf(BetaParams(2.0, 0.5), 1.0) == std::numeric_limits<double>::infinity());
    CHECK(pdf(BetaParams(2.0, 2.0), 0.0) == 0.0);
    CHECK(pdf(BetaParams(2.0, 2.0), 1.0) == 0.0);
    CHECK(pdf(BetaParams(1.0, 3.0), 0.0) == doctest::Approx(3.0)); // finite limit
    CHECK_THROWS_AS(pdf(BetaParams(1, 1), -0.1), std::domain_error);
    CHECK_THROWS_AS(pdf(BetaParams(1, 1), 1.5), std::domain_error);
}

TEST_CASE("pdf integrates to one") {
    // Sub-1 shapes put measurable mass within one double ulp of the
    // endpoints, which no quadrature of pointwise pdf values can see, so
    // the check factors the density: the pdf must be a constant multiple
    // of the kernel t^(a-1) (1-t)^(b-1), and that constant must invert the
    // quadrature value of the kernel's full integral.
    Xoshiro256 rng(201);
    for (int rep = 0; rep < 200; ++rep) {
        const double a = 0.05 + rng.next_u01() * 49.95;
        const double b = 0.05 + rng.next_u01() * 49.95;
        BetaParams p(a, b);

        auto kernel = [&](double t) {
            return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t));
        };
        const double inv_norm = pdf(p, 0.37) / kernel(0.37);
        for (double t : {0.12, 0.61, 0.88}) {
            CHECK(pdf(p, t) / kernel(t) == doctest::Approx(inv_norm).epsilon(1e-12));
        }
        const double total = inv_norm * oracle::beta_kernel_integral(a, b);
        CHECK(std::fabs(total - 1.0) <= 1e-6);
    }
}

TEST_CASE("cdf closed forms") {
    CHECK(cdf(BetaParams(1, 1), 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(cdf(BetaParams(2, 2), 0.5) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(cdf(BetaParams(2, 1), 0.25) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(cdf(BetaParams(0.24, 17.5), 0.0) == 0.0);
    CHECK(cdf(BetaParams(0.24, 17.5), 1.0) == 1.0);
}

TEST_CASE("quantile closed forms and round trips") {
    CHECK(quantile(BetaParams(1, 1), 0.42) == doctest::Approx(0.42).epsilon(1e-12));
    CHECK(quantile(BetaParams(2, 1), 0.25) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(quantile(BetaParams(1, 1), 0.0) == 0.0);
    CHECK(quantile(BetaParams(1, 1), 1.0) == 1.0);

    const BetaParams ushape(0.47, 0.36);
    const double med = quantile(ushape, 0.5);
    CHECK(std::fabs(cdf(ushape, med) - 0.5) <= 1e-10);

    for (const BetaParams p : {BetaParams(0.47, 0.36), BetaParams(3.27, 0.67),
                               BetaParams(0.24, 17.5), BetaParams(5.0, 5.0)}) {
        for (double q : {0.01, 0.1, 0.5, 0.9, 0.99}) {
            CHECK(std::fabs(cdf(p, quantile(p, q)) - q) <= 1e-8);
        }
    }
    CHECK_THROWS_AS(quantile(BetaParams(1, 1), -0.01), std::domain_error);
    CHECK_THROWS_AS(quantile(BetaParams(1, 1), 1.01), std::domain_error);
}

TEST_CASE("moments closed forms") {
    const Moments m1 = moments(BetaParams(1, 1));
    CHECK(m1.mean == doctest::Approx(0.5));
    CHECK(m1.variance == doctest::Approx(1.0 / 12.0));

    const Moments m2 = moments(BetaParams(2, 5));
    CHECK(m2.mean == doctest::Approx(2.0 / 7.0));
    CHECK(m2.variance == doctest::Approx(10.0 / (49.0 * 8.0)));

    for (double k : {0.3, 1.0, 4.2}) {
        CHECK(moments(BetaParams(k, k)).mean == doctest::Approx(0.5));
    }
}

TEST_CASE("shape taxonomy on the published fits") {
    const ShapeClass u = classify_shape(BetaParams(0.47, 0.36));
    CHECK(u.fine == FineShape::U);
    CHECK(u.coarse == CoarseShape::U);

    const ShapeClass rj = classify_shape(BetaParams(3.27, 0.67));
    CHECK(rj.fine == FineShape::ReverseJ);
    CHECK(rj.coarse == CoarseShape::JFamily);

    const ShapeClass j = classify_shape(BetaParams(0.24, 17.5));
    CHECK(j.fine == FineShape::J);
    CHECK(j.coarse == CoarseShape::JFamily);

    const ShapeClass uni = classify_shape(BetaParams(1.0, 1.0));
    CHECK(uni.fine == FineShape::Uniform);
    CHECK(uni.coarse == CoarseShape::Singular);
    CHECK(uni.symmetric);
}

TEST_CASE("every published fit is U or J-family, never bell") {
    for (const auto& col : fixture::kTable1) {
        const auto client = classify_shape(BetaParams(col.client.alpha, col.client.beta));
        CHECK(client.coarse != CoarseShape::Bell);
        CHECK(client.coarse != CoarseShape::Singular);
        for (const auto& imp : col.imposters) {
            const auto shape = classify_shape(BetaParams(imp.alpha, imp.beta));
            CHECK((shape.coarse == CoarseShape::U || shape.coarse == CoarseShape::JFamily));
        }
    }
}

TEST_CASE("boundary classes within tolerance of 1") {
    CHECK(classify_shape(BetaParams(1.0 + 5e-10, 1.0 - 5e-10)).fine == FineShape::Uniform);
    CHECK(classify_shape(BetaParams(1.0, 2.5)).fine == FineShape::DecreasingLinearLike);
    CHECK(classify_shape(BetaParams(1.0, 0.5)).fine == FineShape::RightBoundary);
    CHECK(classify_shape(BetaParams(2.5, 1.0)).fine == FineShape::IncreasingLinearLike);
    CHECK(classify_shape(BetaParams(0.5, 1.0)).fine == FineShape::LeftBoundary);
    // A looser tolerance widens the boundary band.
    CHECK(classify_shape(BetaParams(1.05, 3.0), 0.1).fine == FineShape::DecreasingLinearLike);
}

TEST_CASE("classification is symmetric under parameter swap") {
    Xoshiro256 rng(202);
    auto swapped = [](FineShape s) {
        switch (s) {
            case FineShape::J: return FineShape::ReverseJ;
            case FineShape::ReverseJ: return FineShape::J;
            case FineShape::IncreasingLinearLike: return FineShape::DecreasingLinearLike;
            case FineShape::DecreasingLinearLike: return FineShape::IncreasingLinearLike;
            case FineShape::LeftBoundary: return FineShape::RightBoundary;
            case FineShape::RightBoundary: return FineShape::LeftBoundary;
            default: return s;
        }
    };
    for (int i = 0; i < 200; ++i) {
        const double a = 0.05 + rng.next_u01() * 5.0;
        const double b = 0.05 + rng.next_u01() * 5.0;
        const auto direct = classify_shape(BetaParams(a, b));
        const auto mirror = classify_shape(BetaParams(b, a));
        CHECK(mirror.fine == swapped(direct.fine));
        CHECK(mirror.coarse == direct.coarse);
    }
}

TEST_CASE("sampling is deterministic per seed") {
    const auto s1 = sample(BetaParams(0.24, 17.5), 500, 77);
    const auto s2 = sample(BetaParams(0.24, 17.5), 500, 77);
    const auto s3 = sample(BetaParams(0.24, 17.5), 500, 78);
    CHECK(s1 == s2);
    CHECK(s1 != s3);
    CHECK(sample(BetaParams(1, 1), 0, 7).empty());
    for (double v : s1) CHECK((v > 0.0 && v < 1.0));
}

TEST_CASE("sample mean within four standard errors") {
    const std::size_t n = 100000;
    const auto s = sample(BetaParams(2, 5), n, 4242);
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= static_cast<double>(n);
    const Moments m = moments(BetaParams(2, 5));
    const double se = std::sqrt(m.variance / static_cast<double>(n));
    CHECK(std::fabs(mean - m.mean) <= 4.0 * se);
}

TEST_CASE("uniform sample passes a KS check") {
    const std::size_t n = 100000;
    auto s = sample(BetaParams(1, 1), n, 5150);
    std::sort(s.begin(), s.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f_hi = static_cast<double>(i + 1) / n;
        const double f_lo = static_cast<double>(i) / n;
        ks = std::max(ks, std::max(std::fabs(f_hi - s[i]), std::fabs(s[i] - f_lo)));
    }
    CHECK(ks < 0.01);
}

} // TEST_SUITE
