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

#ifndef BETAROC_INGEST_HPP
#define BETAROC_INGEST_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace betaroc {

/// Validated per-class response samples, all values in [0, 1].
struct LabeledScores {
    std::vector<double> clients;
    std::vector<double> imposters;
    std::string source;        // provenance (file path or generator tag)
    std::size_t n_snapped = 0; // scores snapped onto the [0,1] boundary at parse time
    std::size_t n_clamped = 0; // filled by the fitting stage, never by parsing
};

enum class ScoresFormat { Csv, Jsonl };

/// Parses labeled scores. CSV wants a header naming `label` and `score`
/// columns (order free, extras ignored); JSONL wants one object per line
/// with those two fields. Labels are case-insensitive client/imposter/0/1.
/// Scores outside [0,1] by at most 1e-9 are snapped to the boundary;
/// anything worse is a ParseError carrying the line number.
LabeledScores parse_scores(std::istream& in, ScoresFormat format,
                           std::string source = "<stream>");

LabeledScores parse_scores_file(const std::string& path, ScoresFormat format);

/// Serializes to the canonical CSV form accepted by parse_scores
/// (clients first, then imposters, full round-trip precision).
void write_scores_csv(std::ostream& out, const LabeledScores& scores);

/// Equal-width histogram over [0,1]: bin k covers [k/bins, (k+1)/bins),
/// the final bin is right-closed so 1.0 is counted. Counts sum to the
/// sample size; out-of-range values are a precondition violation upstream.
std::vector<std::size_t> histogram(const std::vector<double>& scores, std::size_t bins = 20);

} // namespace betaroc

#endif // BETAROC_INGEST_HPP
