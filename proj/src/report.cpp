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

#include "betaroc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "betaroc/version.hpp"

namespace betaroc {

namespace {

// ---------------------------------------------------------------------
// Deterministic JSON emission. Keys are written in a fixed order and all
// doubles use 17 significant digits, which round-trips exactly; nlohmann
// is only used for parsing.

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class JsonWriter {
public:
    void begin_object() {
        pre();
        buf_ += '{';
        needs_comma_ = false;
    }
    void end_object() {
        buf_ += '}';
        needs_comma_ = true;
    }
    void begin_object_field(const char* key) {
        pre();
        append_key(key);
        buf_ += '{';
        needs_comma_ = false;
    }
    void begin_array(const char* key) {
        pre();
        append_key(key);
        buf_ += '[';
        needs_comma_ = false;
    }
    void end_array() {
        buf_ += ']';
        needs_comma_ = true;
    }
    void begin_array_element() { begin_object(); }

    void field(const char* key, const std::string& v) {
        raw(key, "\"" + escape_json(v) + "\"");
    }
    void field(const char* key, const char* v) { field(key, std::string(v)); }
    void field(const char* key, double v) { raw(key, fmt_double(v)); }
    void field(const char* key, bool v) { raw(key, v ? "true" : "false"); }
    void field(const char* key, int v) { raw(key, std::to_string(v)); }
    void field(const char* key, std::size_t v) { raw(key, std::to_string(v)); }
    void null_field(const char* key) { raw(key, "null"); }

    const std::string& str() const { return buf_; }

private:
    void pre() {
        if (needs_comma_) buf_ += ',';
    }
    void append_key(const char* key) {
        buf_ += '"';
        buf_ += key;
        buf_ += "\":";
    }
    void raw(const char* key, const std::string& value) {
        pre();
        append_key(key);
        buf_ += value;
        needs_comma_ = true;
    }

    std::string buf_;
    bool needs_comma_ = false;
};

void write_class(JsonWriter& w, const char* key, const ClassReport& c) {
    w.begin_object_field(key);
    w.field("alpha", c.fit.params.alpha);
    w.field("beta", c.fit.params.beta);
    w.field("log_likelihood", c.fit.log_likelihood);
    w.field("iterations", c.fit.iterations);
    w.field("converged", c.fit.converged);
    w.field("init_alpha", c.fit.initializer.alpha);
    w.field("init_beta", c.fit.initializer.beta);
    w.field("n_clamped", c.fit.n_clamped);
    w.field("shape_fine", to_string(c.shape.fine));
    w.field("shape_coarse", to_string(c.shape.coarse));
    w.field("symmetric", c.shape.symmetric);
    w.end_object();
}

ClassReport read_class(const nlohmann::json& j) {
    ClassReport c;
    c.fit.params = BetaParams(j.at("alpha").get<double>(), j.at("beta").get<double>());
    c.fit.log_likelihood = j.at("log_likelihood").get<double>();
    c.fit.iterations = j.at("iterations").get<int>();
    c.fit.converged = j.at("converged").get<bool>();
    c.fit.initializer =
        BetaParams(j.at("init_alpha").get<double>(), j.at("init_beta").get<double>());
    c.fit.n_clamped = j.at("n_clamped").get<std::size_t>();
    c.shape.fine = fine_shape_from_string(j.at("shape_fine").get<std::string>());
    c.shape.coarse = coarse_shape_from_string(j.at("shape_coarse").get<std::string>());
    c.shape.symmetric = j.at("symmetric").get<bool>();
    return c;
}

// ---------------------------------------------------------------------
// SVG helpers. Fixed canvas, two decimal places for coordinates; output
// is a standalone SVG 1.1 document with no external references.

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr double kSvgW = 640.0;
constexpr double kSvgH = 480.0;
constexpr double kMarginL = 62.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 46.0;

std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double px_x(double unit_x) {
    return kMarginL + unit_x * (kSvgW - kMarginL - kMarginR);
}

double px_y(double unit_y) {
    return kSvgH - kMarginB - unit_y * (kSvgH - kMarginT - kMarginB);
}

void svg_open(std::ostringstream& s, const std::string& title) {
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgW
      << "\" height=\"" << kSvgH << "\" viewBox=\"0 0 " << kSvgW << ' ' << kSvgH << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kSvgW << "\" height=\"" << kSvgH
      << "\" fill=\"white\"/>\n";
    if (!title.empty()) {
        s << "<text x=\"" << fmt_px(kSvgW / 2) << "\" y=\"22\" text-anchor=\"middle\" "
             "font-family=\"sans-serif\" font-size=\"14\">"
          << escape_xml(title) << "</text>\n";
    }
}

void svg_axes(std::ostringstream& s, const std::string& x_label, const std::string& y_label,
              double y_max) {
    s << "<rect x=\"" << fmt_px(kMarginL) << "\" y=\"" << fmt_px(kMarginT) << "\" width=\""
      << fmt_px(kSvgW - kMarginL - kMarginR) << "\" height=\""
      << fmt_px(kSvgH - kMarginT - kMarginB)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double u = i / 5.0;
        const double x = px_x(u);
        const double y = px_y(u);
        s << "<line x1=\"" << fmt_px(x) << "\" y1=\"" << fmt_px(kSvgH - kMarginB) << "\" x2=\""
          << fmt_px(x) << "\" y2=\"" << fmt_px(kSvgH - kMarginB + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << fmt_px(x) << "\" y=\"" << fmt_px(kSvgH - kMarginB + 18)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
          << fmt_tick(u) << "</text>\n";
        s << "<line x1=\"" << fmt_px(kMarginL - 5) << "\" y1=\"" << fmt_px(y) << "\" x2=\""
          << fmt_px(kMarginL) << "\" y2=\"" << fmt_px(y) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << fmt_px(kMarginL - 8) << "\" y=\"" << fmt_px(y + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
          << fmt_tick(u * y_max) << "</text>\n";
    }
    s << "<text x=\"" << fmt_px((kMarginL + kSvgW - kMarginR) / 2) << "\" y=\""
      << fmt_px(kSvgH - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
      << "</text>\n";
    s << "<text x=\"16\" y=\"" << fmt_px((kMarginT + kSvgH - kMarginB) / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 "
      << fmt_px((kMarginT + kSvgH - kMarginB) / 2) << ")\">" << y_label << "</text>\n";
}

void svg_polyline(std::ostringstream& s, const std::vector<RocPoint>& pts, double y_max,
                  const char* color, const char* dash) {
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (dash) s << " stroke-dasharray=\"" << dash << "\"";
    s << " points=\"";
    for (const auto& p : pts) {
        s << fmt_px(px_x(p.fpr)) << ',' << fmt_px(px_y(p.tpr / y_max)) << ' ';
    }
    s << "\"/>\n";
}

} // namespace

AnalysisReport make_report(const LabeledScores& scores, const AnalysisOptions& options) {
    options.fit.validate();
    AnalysisReport r;
    r.tool_version = kVersion;
    r.source = scores.source;
    r.n_clients = scores.clients.size();
    r.n_imposters = scores.imposters.size();
    r.n_snapped = scores.n_snapped;
    r.options = options;

    const FittedPair pair = fit_pair(scores.clients, scores.imposters, options.fit);
    r.client = {pair.client, classify_shape(pair.client.params, options.shape_tol)};
    r.imposter = {pair.imposter, classify_shape(pair.imposter.params, options.shape_tol)};

    const FittedPair oriented = orient(pair, options.orientation);
    r.extremal = extremal_analysis(oriented);
    r.theoretical_auc = theoretical_auc(oriented);
    r.empirical_auc = empirical_auc(scores.clients, scores.imposters, options.orientation);
    r.ks = ks_statistic(scores.clients, scores.imposters);

    for (double t : options.thresholds) {
        r.threshold_metrics.push_back(
            threshold_metrics(scores.clients, scores.imposters, t, options.orientation));
    }
    return r;
}

std::string to_json(const AnalysisReport& r) {
    JsonWriter w;
    w.begin_object();
    w.field("schema_version", r.schema_version);
    w.begin_object_field("tool");
    w.field("name", "betaroc");
    w.field("version", r.tool_version);
    w.end_object();
    w.begin_object_field("source");
    w.field("path", r.source);
    w.field("n_clients", r.n_clients);
    w.field("n_imposters", r.n_imposters);
    w.field("n_snapped", r.n_snapped);
    w.end_object();
    w.begin_object_field("config");
    w.field("clamp_epsilon", r.options.fit.clamp_epsilon);
    w.field("grad_tol", r.options.fit.grad_tol);
    w.field("max_iter", r.options.fit.max_iter);
    w.field("param_floor", r.options.fit.param_floor);
    w.field("param_ceiling", r.options.fit.param_ceiling);
    w.field("shape_tol", r.options.shape_tol);
    w.field("roc_grid", r.options.roc_grid);
    w.field("positive_class", r.options.orientation.imposter_positive ? "imposter" : "client");
    w.field("positive_below", r.options.orientation.positive_below);
    w.end_object();
    write_class(w, "client", r.client);
    write_class(w, "imposter", r.imposter);
    w.begin_object_field("extremal");
    w.field("slope_limit_at_0", to_string(r.extremal.slope_limit_at_0));
    w.field("slope_limit_at_1", to_string(r.extremal.slope_limit_at_1));
    w.field("above_diagonal_near_0", r.extremal.above_diagonal_near_0);
    w.field("above_diagonal_near_1", r.extremal.above_diagonal_near_1);
    w.field("exponent_at_0", r.extremal.exponent_at_0);
    w.field("exponent_at_1", r.extremal.exponent_at_1);
    w.end_object();
    w.begin_object_field("metrics");
    w.field("empirical_auc", r.empirical_auc);
    w.field("theoretical_auc", r.theoretical_auc);
    w.field("ks", r.ks);
    w.begin_array("thresholds");
    for (const auto& m : r.threshold_metrics) {
        w.begin_array_element();
        w.field("threshold", m.threshold);
        w.field("tp", m.counts.tp);
        w.field("fp", m.counts.fp);
        w.field("tn", m.counts.tn);
        w.field("fn", m.counts.fn);
        if (m.tpr_defined) w.field("tpr", m.tpr);
        else w.null_field("tpr");
        if (m.ppv_defined) w.field("ppv", m.ppv);
        else w.null_field("ppv");
        if (m.f1_defined) w.field("f1", m.f1);
        else w.null_field("f1");
        w.end_object();
    }
    w.end_array();
    w.end_object();
    w.end_object();
    return w.str() + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("report_from_json: ") + e.what());
    }
    try {
        AnalysisReport r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != 1) {
            throw InputError("report_from_json: unsupported schema_version " +
                             std::to_string(r.schema_version));
        }
        r.tool_version = j.at("tool").at("version").get<std::string>();
        const auto& src = j.at("source");
        r.source = src.at("path").get<std::string>();
        r.n_clients = src.at("n_clients").get<std::size_t>();
        r.n_imposters = src.at("n_imposters").get<std::size_t>();
        r.n_snapped = src.at("n_snapped").get<std::size_t>();

        const auto& cfg = j.at("config");
        r.options.fit.clamp_epsilon = cfg.at("clamp_epsilon").get<double>();
        r.options.fit.grad_tol = cfg.at("grad_tol").get<double>();
        r.options.fit.max_iter = cfg.at("max_iter").get<int>();
        r.options.fit.param_floor = cfg.at("param_floor").get<double>();
        r.options.fit.param_ceiling = cfg.at("param_ceiling").get<double>();
        r.options.shape_tol = cfg.at("shape_tol").get<double>();
        r.options.roc_grid = cfg.at("roc_grid").get<std::size_t>();
        r.options.orientation.imposter_positive =
            cfg.at("positive_class").get<std::string>() == "imposter";
        r.options.orientation.positive_below = cfg.at("positive_below").get<bool>();

        r.client = read_class(j.at("client"));
        r.imposter = read_class(j.at("imposter"));

        const auto& ex = j.at("extremal");
        r.extremal.slope_limit_at_0 =
            slope_limit_from_string(ex.at("slope_limit_at_0").get<std::string>());
        r.extremal.slope_limit_at_1 =
            slope_limit_from_string(ex.at("slope_limit_at_1").get<std::string>());
        r.extremal.above_diagonal_near_0 = ex.at("above_diagonal_near_0").get<bool>();
        r.extremal.above_diagonal_near_1 = ex.at("above_diagonal_near_1").get<bool>();
        r.extremal.exponent_at_0 = ex.at("exponent_at_0").get<double>();
        r.extremal.exponent_at_1 = ex.at("exponent_at_1").get<double>();

        const auto& met = j.at("metrics");
        r.empirical_auc = met.at("empirical_auc").get<double>();
        r.theoretical_auc = met.at("theoretical_auc").get<double>();
        r.ks = met.at("ks").get<double>();
        for (const auto& jm : met.at("thresholds")) {
            ThresholdMetrics m;
            m.threshold = jm.at("threshold").get<double>();
            m.counts.tp = jm.at("tp").get<std::size_t>();
            m.counts.fp = jm.at("fp").get<std::size_t>();
            m.counts.tn = jm.at("tn").get<std::size_t>();
            m.counts.fn = jm.at("fn").get<std::size_t>();
            m.tpr_defined = !jm.at("tpr").is_null();
            if (m.tpr_defined) m.tpr = jm.at("tpr").get<double>();
            m.ppv_defined = !jm.at("ppv").is_null();
            if (m.ppv_defined) m.ppv = jm.at("ppv").get<double>();
            m.f1_defined = !jm.at("f1").is_null();
            if (m.f1_defined) m.f1 = jm.at("f1").get<double>();
            r.options.thresholds.push_back(m.threshold);
            r.threshold_metrics.push_back(m);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("report_from_json: ") + e.what());
    }
}

std::string plot_density(const std::vector<double>& scores, const BetaParams& fit,
                         std::size_t bins, const std::string& title) {
    if (scores.empty()) {
        throw InputError("plot_density: scores are empty");
    }
    const auto counts = histogram(scores, bins);
    const double bin_w = 1.0 / static_cast<double>(bins);
    const double n = static_cast<double>(scores.size());

    std::vector<double> density(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        density[k] = static_cast<double>(counts[k]) / (n * bin_w);
    }

    // Fitted density on an interior grid; clip the overlay at its 99.5th
    // percentile so diverging endpoints keep the rest of the plot readable.
    constexpr std::size_t kGrid = 512;
    std::vector<RocPoint> curve(kGrid);
    std::vector<double> values(kGrid);
    for (std::size_t i = 0; i < kGrid; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / kGrid;
        values[i] = pdf(fit, x);
        curve[i].fpr = x;
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double ceiling =
        std::max(sorted[static_cast<std::size_t>(0.995 * (kGrid - 1))], 1e-12);
    for (std::size_t i = 0; i < kGrid; ++i) {
        curve[i].tpr = std::min(values[i], ceiling);
    }

    double y_max = ceiling;
    for (double d : density) y_max = std::max(y_max, d);

    std::ostringstream s;
    svg_open(s, title);
    for (std::size_t k = 0; k < bins; ++k) {
        const double x0 = px_x(static_cast<double>(k) * bin_w);
        const double x1 = px_x(static_cast<double>(k + 1) * bin_w);
        const double y = px_y(density[k] / y_max);
        s << "<rect x=\"" << fmt_px(x0) << "\" y=\"" << fmt_px(y) << "\" width=\""
          << fmt_px(x1 - x0) << "\" height=\"" << fmt_px(px_y(0.0) - y)
          << "\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\"/>\n";
    }
    svg_polyline(s, curve, y_max, "#d62728", nullptr);
    svg_axes(s, "response", "density", y_max);
    char legend[160];
    std::snprintf(legend, sizeof legend, "beta(%.4g, %.4g)", fit.alpha, fit.beta);
    s << "<text x=\"" << fmt_px(kSvgW - kMarginR - 6) << "\" y=\"" << fmt_px(kMarginT + 16)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">"
      << legend << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string plot_roc(const RocCurve& empirical, const RocCurve& theoretical,
                     const std::string& title) {
    std::ostringstream s;
    svg_open(s, title);
    svg_polyline(s, {{0.0, 0.0}, {1.0, 1.0}}, 1.0, "#999999", "6,4");
    svg_polyline(s, empirical.points, 1.0, "#1f77b4", nullptr);
    svg_polyline(s, theoretical.points, 1.0, "#d62728", nullptr);
    svg_axes(s, "false positive rate", "true positive rate", 1.0);
    s << "<text x=\"" << fmt_px(kSvgW - kMarginR - 6) << "\" y=\"" << fmt_px(px_y(0.10))
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#1f77b4\">empirical</text>\n";
    s << "<text x=\"" << fmt_px(kSvgW - kMarginR - 6) << "\" y=\"" << fmt_px(px_y(0.05))
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#d62728\">theoretical</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string plot_roc_theoretical(const RocCurve& theoretical, const std::string& title) {
    std::ostringstream s;
    svg_open(s, title);
    svg_polyline(s, {{0.0, 0.0}, {1.0, 1.0}}, 1.0, "#999999", "6,4");
    svg_polyline(s, theoretical.points, 1.0, "#d62728", nullptr);
    svg_axes(s, "false positive rate", "true positive rate", 1.0);
    s << "<text x=\"" << fmt_px(kSvgW - kMarginR - 6) << "\" y=\"" << fmt_px(px_y(0.05))
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#d62728\">theoretical</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace betaroc
