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

#include "betaroc/ingest.hpp"

#include <cmath>
#include <sstream>

#include <doctest.h>

#include "betaroc/errors.hpp"
#include "betaroc/rng.hpp"

using namespace betaroc;

namespace {

LabeledScores parse_csv_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scores(in, ScoresFormat::Csv, "<test>");
}

LabeledScores parse_jsonl_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scores(in, ScoresFormat::Jsonl, "<test>");
}

} // namespace

TEST_SUITE("ingest") {

TEST_CASE("basic CSV parsing") {
    const LabeledScores s = parse_csv_text("label,score\nclient,0.9\nimposter,0.1\n");
    REQUIRE(s.clients.size() == 1);
    REQUIRE(s.imposters.size() == 1);
    CHECK(s.clients[0] == 0.9);
    CHECK(s.imposters[0] == 0.1);
    CHECK(s.n_snapped == 0);
    CHECK(s.n_clamped == 0);
}

TEST_CASE("CSV header is order-free and extra columns are ignored") {
    const LabeledScores s = parse_csv_text(
        "run,score,label\n1,0.25,IMPOSTER\n2,0.75,Client\n3,0.5,0\n4,0.125,1\n");
    CHECK(s.clients.size() == 2);   // Client and the "0" label
    CHECK(s.imposters.size() == 2); // IMPOSTER and the "1" label
}

TEST_CASE("boundary snap vs hard error") {
    const LabeledScores snapped = parse_csv_text("label,score\nclient,1.0000000001\n");
    CHECK(snapped.clients[0] == 1.0);
    CHECK(snapped.n_snapped == 1);
    CHECK(snapped.n_clamped == 0); // snap is not clamp

    const LabeledScores low = parse_csv_text("label,score\nimposter,-0.0000000001\n");
    CHECK(low.imposters[0] == 0.0);
    CHECK(low.n_snapped == 1);

    try {
        parse_csv_text("label,score\nclient,0.9\nclient,1.5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("CSV error reporting carries line numbers") {
    CHECK_THROWS_AS(parse_csv_text(""), ParseError);
    CHECK_THROWS_AS(parse_csv_text("label,score\n"), ParseError);
    CHECK_THROWS_AS(parse_csv_text("foo,bar\nclient,0.5\n"), ParseError);

    try {
        parse_csv_text("label,score\nghost,0.5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_csv_text("label,score\nclient,abc\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("JSONL parsing") {
    const LabeledScores s = parse_jsonl_text(
        "{\"label\":\"client\",\"score\":0.9}\n"
        "{\"label\":\"imposter\",\"score\":0.1}\n"
        "{\"label\":1,\"score\":0.2}\n");
    CHECK(s.clients.size() == 1);
    CHECK(s.imposters.size() == 2);

    try {
        parse_jsonl_text("{\"label\":\"client\",\"score\":0.9}\nnot json\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_jsonl_text("{\"label\":\"client\"}\n"), ParseError);
    CHECK_THROWS_AS(parse_jsonl_text("{\"label\":\"client\",\"score\":\"x\"}\n"), ParseError);
}

TEST_CASE("round trip preserves every score bit") {
    Xoshiro256 rng(601);
    LabeledScores original;
    original.source = "<test>";
    for (int i = 0; i < 50; ++i) original.clients.push_back(rng.next_u01());
    for (int i = 0; i < 30; ++i) original.imposters.push_back(rng.next_u01());

    std::ostringstream out;
    write_scores_csv(out, original);
    const LabeledScores again = parse_csv_text(out.str());
    CHECK(again.clients == original.clients);
    CHECK(again.imposters == original.imposters);

    std::ostringstream out2;
    write_scores_csv(out2, again);
    CHECK(out2.str() == out.str());
}

TEST_CASE("histogram edge conventions") {
    // Bins are [k/n, (k+1)/n) with a right-closed final bin.
    const auto h = histogram({0.0, 0.049, 0.26, 0.96, 1.0}, 20);
    CHECK(h[0] == 2);  // 0.0 and 0.049
    CHECK(h[5] == 1);  // 0.26
    CHECK(h[19] == 2); // 0.96 and the right-closed 1.0
    std::size_t total = 0;
    for (auto c : h) total += c;
    CHECK(total == 5);

    const auto quarters = histogram({0.25, 0.5}, 4);
    CHECK(quarters[1] == 1);
    CHECK(quarters[2] == 1);

    CHECK(histogram({}, 20) == std::vector<std::size_t>(20, 0));
    CHECK_THROWS_AS(histogram({0.5}, 0), InputError);
    CHECK_THROWS_AS(histogram({1.5}, 10), InputError);
}

TEST_CASE("histogram counts sum to the sample size") {
    Xoshiro256 rng(602);
    std::vector<double> scores;
    for (int i = 0; i < 997; ++i) scores.push_back(rng.next_u01());
    const auto h = histogram(scores, 13);
    std::size_t total = 0;
    for (auto c : h) total += c;
    CHECK(total == scores.size());
}

TEST_CASE("uniform sample fills twenty bins evenly") {
    Xoshiro256 rng(603);
    std::vector<double> scores;
    for (int i = 0; i < 1000; ++i) scores.push_back(rng.next_u01());
    const auto h = histogram(scores, 20);
    const double sigma = std::sqrt(1000.0 * 0.05 * 0.95);
    for (auto c : h) {
        CHECK(std::fabs(static_cast<double>(c) - 50.0) <= 5.0 * sigma);
    }
}

} // TEST_SUITE
