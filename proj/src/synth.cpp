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
#include <cstdio>
#include <ostream>
#include <string>

#include "betaroc/errors.hpp"
#include "betaroc/fitting.hpp"

namespace betaroc {

namespace {

void append_class_sample(std::vector<double>& out, const BetaParams& p, std::size_t n,
                         Seed stream_seed) {
    Xoshiro256 rng(stream_seed);
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(rng.next_beta(p.alpha, p.beta));
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

LabeledScores generate_dataset(const BetaParams& client, const BetaParams& imposter,
                               std::size_t n_clients, std::size_t n_imposters, Seed seed) {
    LabeledScores out;
    append_class_sample(out.clients, client, n_clients, derive_subseed(seed, 0, 0));
    append_class_sample(out.imposters, imposter, n_imposters, derive_subseed(seed, 0, 1));
    out.source = "synthetic(a1=" + format_g(client.alpha) + ",b1=" + format_g(client.beta) +
                 ",a2=" + format_g(imposter.alpha) + ",b2=" + format_g(imposter.beta) +
                 ",seed=" + std::to_string(seed) + ")";
    return out;
}

void SweepGrid::validate() const {
    for (const auto* axis : {&alpha1, &beta1, &alpha2, &beta2}) {
        if (axis->empty()) {
            throw InputError("SweepGrid: every axis needs at least one value");
        }
        for (double v : *axis) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw InputError("SweepGrid: axis values must be positive and finite");
            }
        }
    }
}

std::size_t SweepGrid::cells() const {
    return alpha1.size() * beta1.size() * alpha2.size() * beta2.size();
}

void for_each_sweep_row(const SweepGrid& grid, const std::function<void(const SweepRow&)>& sink) {
    grid.validate();

    // The analytic fields need a FittedPair carrier; diagnostics are not
    // meaningful for exact parameters.
    auto as_fit = [](const BetaParams& p) {
        return FitResult{p, 0.0, 0, true, p, 0};
    };

    std::uint64_t cell = 0;
    for (double a1 : grid.alpha1)
        for (double b1 : grid.beta1)
            for (double a2 : grid.alpha2)
                for (double b2 : grid.beta2) {
                    const BetaParams client(a1, b1);
                    const BetaParams imposter(a2, b2);
                    const FittedPair pair{as_fit(client), as_fit(imposter)};

                    SweepRow row;
                    row.alpha1 = a1;
                    row.beta1 = b1;
                    row.alpha2 = a2;
                    row.beta2 = b2;
                    row.client_shape = classify_shape(client, grid.shape_tol);
                    row.imposter_shape = classify_shape(imposter, grid.shape_tol);
                    row.extremal = extremal_analysis(pair);
                    row.theo_auc = theoretical_auc(pair);

                    if (grid.n_per_cell > 0) {
                        row.has_recovery = true;
                        std::vector<double> cs, is;
                        append_class_sample(cs, client, grid.n_per_cell,
                                            derive_subseed(grid.seed, cell, 0));
                        append_class_sample(is, imposter, grid.n_per_cell,
                                            derive_subseed(grid.seed, cell, 1));
                        try {
                            const FittedPair fitted = fit_pair(cs, is, grid.fit);
                            row.fit_ok = true;
                            row.rec_alpha1 = fitted.client.params.alpha;
                            row.rec_beta1 = fitted.client.params.beta;
                            row.rec_alpha2 = fitted.imposter.params.alpha;
                            row.rec_beta2 = fitted.imposter.params.beta;
                        } catch (const FitError&) {
                            row.fit_ok = false;
                        } catch (const InputError&) {
                            row.fit_ok = false;
                        }
                    }
                    sink(row);
                    ++cell;
                }
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.cells());
    for_each_sweep_row(grid, [&](const SweepRow& r) { rows.push_back(r); });
    return rows;
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    out << "alpha1,beta1,alpha2,beta2,client_shape,imposter_shape,"
           "slope0,slope1,above0,above1,auc";
    if (grid.n_per_cell > 0) {
        out << ",rec_alpha1,rec_beta1,rec_alpha2,rec_beta2,fit_ok";
    }
    out << '\n';

    for_each_sweep_row(grid, [&](const SweepRow& r) {
        out << format_g(r.alpha1) << ',' << format_g(r.beta1) << ',' << format_g(r.alpha2)
            << ',' << format_g(r.beta2) << ',' << to_string(r.client_shape.fine) << ','
            << to_string(r.imposter_shape.fine) << ',' << to_string(r.extremal.slope_limit_at_0)
            << ',' << to_string(r.extremal.slope_limit_at_1) << ','
            << (r.extremal.above_diagonal_near_0 ? 1 : 0) << ','
            << (r.extremal.above_diagonal_near_1 ? 1 : 0) << ',' << format_g(r.theo_auc);
        if (r.has_recovery) {
            if (r.fit_ok) {
                out << ',' << format_g(r.rec_alpha1) << ',' << format_g(r.rec_beta1) << ','
                    << format_g(r.rec_alpha2) << ',' << format_g(r.rec_beta2) << ",1";
            } else {
                out << ",nan,nan,nan,nan,0";
            }
        }
        out << '\n';
    });
}

} // namespace betaroc
