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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "betaroc/errors.hpp"

namespace betaroc {

namespace {

constexpr double kSnapTolerance = 1e-9;

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

// true -> imposter, false -> client.
bool parse_label(const std::string& raw, std::size_t line_no) {
    const std::string label = to_lower(trim(raw));
    if (label == "client" || label == "0") return false;
    if (label == "imposter" || label == "1") return true;
    throw ParseError("unknown label '" + raw + "'", line_no);
}

double parse_number(const std::string& raw, std::size_t line_no) {
    const std::string s = trim(raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("non-numeric score '" + raw + "'", line_no);
    }
    return value;
}

double snap_score(double value, std::size_t line_no, std::size_t& n_snapped) {
    if (!std::isfinite(value)) {
        throw ParseError("non-finite score", line_no);
    }
    if (value >= 0.0 && value <= 1.0) return value;
    if (value < 0.0 && value >= -kSnapTolerance) {
        ++n_snapped;
        return 0.0;
    }
    if (value > 1.0 && value <= 1.0 + kSnapTolerance) {
        ++n_snapped;
        return 1.0;
    }
    throw ParseError("score " + std::to_string(value) + " outside [0,1]", line_no);
}

LabeledScores parse_csv(std::istream& in, std::string source) {
    LabeledScores out;
    out.source = std::move(source);

    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty file", 1);
    }
    ++line_no;
    const auto header = split_csv_line(line);
    std::ptrdiff_t label_col = -1, score_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = to_lower(header[i]);
        if (name == "label") label_col = static_cast<std::ptrdiff_t>(i);
        if (name == "score") score_col = static_cast<std::ptrdiff_t>(i);
    }
    if (label_col < 0 || score_col < 0) {
        throw ParseError("header must name 'label' and 'score' columns", 1);
    }

    bool saw_row = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (static_cast<std::size_t>(label_col) >= fields.size() ||
            static_cast<std::size_t>(score_col) >= fields.size()) {
            throw ParseError("row has too few columns", line_no);
        }
        const bool is_imposter = parse_label(fields[label_col], line_no);
        const double score =
            snap_score(parse_number(fields[score_col], line_no), line_no, out.n_snapped);
        (is_imposter ? out.imposters : out.clients).push_back(score);
        saw_row = true;
    }
    if (!saw_row) {
        throw ParseError("no data rows", line_no);
    }
    return out;
}

LabeledScores parse_jsonl(std::istream& in, std::string source) {
    LabeledScores out;
    out.source = std::move(source);

    std::string line;
    std::size_t line_no = 0;
    bool saw_row = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
        }
        if (!obj.is_object() || !obj.contains("label") || !obj.contains("score")) {
            throw ParseError("object must contain 'label' and 'score'", line_no);
        }
        std::string label;
        if (obj["label"].is_string()) {
            label = obj["label"].get<std::string>();
        } else if (obj["label"].is_number_integer()) {
            label = std::to_string(obj["label"].get<long long>());
        } else {
            throw ParseError("label must be a string or integer", line_no);
        }
        if (!obj["score"].is_number()) {
            throw ParseError("score must be a number", line_no);
        }
        const bool is_imposter = parse_label(label, line_no);
        const double score =
            snap_score(obj["score"].get<double>(), line_no, out.n_snapped);
        (is_imposter ? out.imposters : out.clients).push_back(score);
        saw_row = true;
    }
    if (!saw_row) {
        throw ParseError("no data rows", line_no == 0 ? 1 : line_no);
    }
    return out;
}

} // namespace

LabeledScores parse_scores(std::istream& in, ScoresFormat format, std::string source) {
    return format == ScoresFormat::Csv ? parse_csv(in, std::move(source))
                                       : parse_jsonl(in, std::move(source));
}

LabeledScores parse_scores_file(const std::string& path, ScoresFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return parse_scores(in, format, path);
}

void write_scores_csv(std::ostream& out, const LabeledScores& scores) {
    out << "label,score\n";
    char buf[64];
    auto write_row = [&](const char* label, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << label << ',' << buf << '\n';
    };
    for (double v : scores.clients) write_row("client", v);
    for (double v : scores.imposters) write_row("imposter", v);
}

std::vector<std::size_t> histogram(const std::vector<double>& scores, std::size_t bins) {
    if (bins < 1) {
        throw InputError("histogram: bins must be >= 1");
    }
    std::vector<std::size_t> counts(bins, 0);
    const double b = static_cast<double>(bins);
    for (double s : scores) {
        if (!(s >= 0.0 && s <= 1.0)) {
            throw InputError("histogram: scores must lie in [0,1]");
        }
        auto idx = static_cast<std::size_t>(s * b);
        if (idx >= bins) idx = bins - 1; // 1.0 belongs to the final bin
        ++counts[idx];
    }
    return counts;
}

} // namespace betaroc
