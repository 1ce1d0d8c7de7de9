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

#ifndef BETAROC_SYNTH_HPP
#define BETAROC_SYNTH_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "betaroc/analysis.hpp"
#include "betaroc/beta_distribution.hpp"
#include "betaroc/ingest.hpp"

namespace betaroc {

/// Seeded synthetic dataset for a client/imposter parameter pair. The two
/// classes draw from decorrelated sub-seeds (derive_subseed(seed, 0, 0)
/// and (seed, 0, 1)), so identical inputs give bit-identical scores.
LabeledScores generate_dataset(const BetaParams& client, const BetaParams& imposter,
                               std::size_t n_clients, std::size_t n_imposters, Seed seed);

/// Cartesian grid over the four beta parameter axes. Cells are visited
/// with alpha1 outermost and beta2 innermost; the linear cell index in
/// that order feeds the per-cell sub-seed derivation.
struct SweepGrid {
    std::vector<double> alpha1;
    std::vector<double> beta1;
    std::vector<double> alpha2;
    std::vector<double> beta2;
    Seed seed = 0;
    std::size_t n_per_cell = 0; // 0 = analytic fields only
    double shape_tol = 1e-9;
    // Sweep samples are synthetic and never hit exact 0/1, so the fit
    // round-trip runs effectively unclamped; the 1e-6 production default
    // would bias small-alpha/beta cells (e.g. a third of Beta(0.1, 20)
    // mass lies below 1e-6).
    FitConfig fit{1e-300, 1e-8, 500, 1e-6, 1e6};

    void validate() const;
    std::size_t cells() const;
};

struct SweepRow {
    double alpha1, beta1, alpha2, beta2;
    ShapeClass client_shape;
    ShapeClass imposter_shape;
    ExtremalReport extremal;
    double theo_auc;
    // Fit round-trip, present when n_per_cell > 0.
    bool has_recovery = false;
    bool fit_ok = false;
    double rec_alpha1 = 0.0, rec_beta1 = 0.0, rec_alpha2 = 0.0, rec_beta2 = 0.0;
};

/// Streams rows in grid order; per-cell fit failures are recorded in the
/// row (fit_ok = false) and never abort the sweep.
void for_each_sweep_row(const SweepGrid& grid, const std::function<void(const SweepRow&)>& sink);

std::vector<SweepRow> run_sweep(const SweepGrid& grid);

/// CSV header: alpha1,beta1,alpha2,beta2,client_shape,imposter_shape,
/// slope0,slope1,above0,above1,auc and, when n_per_cell > 0, the
/// rec_alpha1..rec_beta2,fit_ok recovery columns.
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

} // namespace betaroc

#endif // BETAROC_SYNTH_HPP
