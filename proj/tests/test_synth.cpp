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

#include "betaroc/synth.hpp"

#include <cmath>
#include <sstream>

#include <doctest.h>

using namespace betaroc;

TEST_SUITE("synth") {

TEST_CASE("generate_dataset is deterministic and class-decorrelated") {
    const BetaParams c(1.47, 0.29), i(0.24, 17.5);
    const LabeledScores a = generate_dataset(c, i, 100, 100, 9001);
    const LabeledScores b = generate_dataset(c, i, 100, 100, 9001);
    CHECK(a.clients == b.clients);
    CHECK(a.imposters == b.imposters);
    CHECK(a.clients != a.imposters);

    const LabeledScores other = generate_dataset(c, i, 100, 100, 9002);
    CHECK(a.clients != other.clients);

    const LabeledScores tiny = generate_dataset(c, i, 1, 1, 5);
    CHECK(tiny.clients.size() == 1);
    CHECK(tiny.imposters.size() == 1);
}

TEST_CASE("large synthetic dataset matches its own theoretical AUC") {
    const BetaParams c(1.47, 0.29), i(0.24, 17.5);
    const LabeledScores data = generate_dataset(c, i, 100000, 100000, 37);
    const FittedPair pair{FitResult{c, 0, 0, true, c, 0}, FitResult{i, 0, 0, true, i, 0}};
    const double emp = empirical_auc(data.clients, data.imposters);
    const double theo = theoretical_auc(pair);
    CHECK(std::fabs(emp - theo) <= 0.01);
}

TEST_CASE("analytic sweep over a 2^4 grid") {
    SweepGrid grid;
    grid.alpha1 = grid.beta1 = grid.alpha2 = grid.beta2 = {0.5, 1.5};
    const auto rows = run_sweep(grid);
    REQUIRE(rows.size() == 16);
    CHECK(grid.cells() == 16);

    for (const auto& r : rows) {
        auto expect = [](double a, double b) {
            if (a < 1 && b < 1) return FineShape::U;
            if (a > 1 && b > 1) return FineShape::Bell;
            if (a < 1) return FineShape::J;
            return FineShape::ReverseJ;
        };
        CHECK(r.client_shape.fine == expect(r.alpha1, r.beta1));
        CHECK(r.imposter_shape.fine == expect(r.alpha2, r.beta2));
        if (r.alpha1 == r.alpha2) {
            CHECK(r.extremal.slope_limit_at_0 == SlopeLimit::FinitePositive);
        }
        CHECK_FALSE(r.has_recovery);
    }
}

TEST_CASE("grid order is alpha1-major, beta2-minor") {
    SweepGrid grid;
    grid.alpha1 = {0.5, 2.0};
    grid.beta1 = {1.2};
    grid.alpha2 = {0.7};
    grid.beta2 = {0.3, 3.0};
    const auto rows = run_sweep(grid);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].alpha1 == 0.5);
    CHECK(rows[0].beta2 == 0.3);
    CHECK(rows[1].alpha1 == 0.5);
    CHECK(rows[1].beta2 == 3.0);
    CHECK(rows[2].alpha1 == 2.0);
    CHECK(rows[2].beta2 == 0.3);
}

TEST_CASE("boundary axis values are flagged singular") {
    SweepGrid grid;
    grid.alpha1 = {0.3, 1.0, 3.0};
    grid.beta1 = {1.0};
    grid.alpha2 = {0.5};
    grid.beta2 = {0.5};
    const auto rows = run_sweep(grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].client_shape.fine == FineShape::LeftBoundary);
    CHECK(rows[0].client_shape.coarse == CoarseShape::Singular);
    CHECK(rows[1].client_shape.fine == FineShape::Uniform);
    CHECK(rows[2].client_shape.fine == FineShape::IncreasingLinearLike);
}

TEST_CASE("swapping the class axes complements AUC and transposes the limits") {
    SweepGrid fwd;
    fwd.alpha1 = {0.4, 2.2};
    fwd.beta1 = {0.9};
    fwd.alpha2 = {1.6};
    fwd.beta2 = {0.3, 5.0};
    SweepGrid rev = fwd;
    std::swap(rev.alpha1, rev.alpha2);
    std::swap(rev.beta1, rev.beta2);

    const auto a = run_sweep(fwd);
    const auto b = run_sweep(rev);
    REQUIRE(a.size() == b.size());
    auto flips = [](SlopeLimit s) {
        if (s == SlopeLimit::Zero) return SlopeLimit::Infinite;
        if (s == SlopeLimit::Infinite) return SlopeLimit::Zero;
        return SlopeLimit::FinitePositive;
    };
    for (const auto& row : a) {
        // Find the transposed cell in the swapped sweep.
        for (const auto& other : b) {
            if (other.alpha1 == row.alpha2 && other.beta1 == row.beta2 &&
                other.alpha2 == row.alpha1 && other.beta2 == row.beta1) {
                CHECK(std::fabs(row.theo_auc + other.theo_auc - 1.0) <= 1e-8);
                CHECK(other.extremal.slope_limit_at_0 == flips(row.extremal.slope_limit_at_0));
                CHECK(other.extremal.slope_limit_at_1 == flips(row.extremal.slope_limit_at_1));
            }
        }
    }
}

TEST_CASE("fit round-trip fills the recovery columns") {
    SweepGrid grid;
    grid.alpha1 = {1.8};
    grid.beta1 = {3.0};
    grid.alpha2 = {0.6};
    grid.beta2 = {2.4};
    grid.seed = 123;
    grid.n_per_cell = 20000;
    const auto rows = run_sweep(grid);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].has_recovery);
    CHECK(rows[0].fit_ok);
    CHECK(std::fabs(rows[0].rec_alpha1 - 1.8) / 1.8 <= 0.10);
    CHECK(std::fabs(rows[0].rec_beta1 - 3.0) / 3.0 <= 0.10);
    CHECK(std::fabs(rows[0].rec_alpha2 - 0.6) / 0.6 <= 0.10);
    CHECK(std::fabs(rows[0].rec_beta2 - 2.4) / 2.4 <= 0.10);
}

TEST_CASE("recovery succeeds in at least 90 percent of sampled cells") {
    SweepGrid grid;
    grid.alpha1 = {0.15, 2.2};
    grid.beta1 = {0.7, 18.0};
    grid.alpha2 = {0.4, 5.0};
    grid.beta2 = {1.2, 11.0};
    grid.seed = 4711;
    grid.n_per_cell = 50000;
    const auto rows = run_sweep(grid);
    REQUIRE(rows.size() == 16);
    int good = 0;
    for (const auto& r : rows) {
        if (!r.fit_ok) continue;
        const bool within =
            std::fabs(r.rec_alpha1 - r.alpha1) / r.alpha1 <= 0.10 &&
            std::fabs(r.rec_beta1 - r.beta1) / r.beta1 <= 0.10 &&
            std::fabs(r.rec_alpha2 - r.alpha2) / r.alpha2 <= 0.10 &&
            std::fabs(r.rec_beta2 - r.beta2) / r.beta2 <= 0.10;
        if (within) ++good;
    }
    CHECK(good >= 15); // at least 90% of the 16 cells
}

TEST_CASE("sweep CSV is stable and carries the documented header") {
    SweepGrid grid;
    grid.alpha1 = {0.5, 1.5};
    grid.beta1 = {0.5};
    grid.alpha2 = {1.5};
    grid.beta2 = {0.5};
    std::ostringstream a, b;
    write_sweep_csv(a, grid);
    write_sweep_csv(b, grid);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("alpha1,beta1,alpha2,beta2,client_shape,imposter_shape,"
                        "slope0,slope1,above0,above1,auc\n", 0) == 0);

    grid.n_per_cell = 50;
    std::ostringstream c;
    write_sweep_csv(c, grid);
    CHECK(c.str().find(",rec_alpha1,rec_beta1,rec_alpha2,rec_beta2,fit_ok") !=
          std::string::npos);
}

TEST_CASE("grid validation") {
    SweepGrid bad;
    bad.alpha1 = {};
    bad.beta1 = bad.alpha2 = bad.beta2 = {1.0};
    CHECK_THROWS_AS(run_sweep(bad), InputError);
    bad.alpha1 = {-1.0};
    CHECK_THROWS_AS(run_sweep(bad), InputError);
}

} // TEST_SUITE
