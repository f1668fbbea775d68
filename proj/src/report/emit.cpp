#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dea/error.hpp"
#include "dea/report.hpp"

namespace dea::report {

using nlohmann::json;

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "svg") return Format::svg;
    throw Error(ErrorCode::unsupported_format, "unsupported report format '" + std::string(name) + "'");
}

namespace {

const char* format_name(Format f) {
    switch (f) {
        case Format::text: return "text";
        case Format::csv: return "csv";
        case Format::json: return "json";
        case Format::svg: return "svg";
    }
    return "?";
}

[[noreturn]] void unsupported(Format f, const char* what) {
    throw Error(ErrorCode::unsupported_format, std::string(format_name(f)) + " output is not available for " + what);
}

std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join_numbers(const std::vector<double>& v) {
    std::vector<std::string> parts;
    for (double x : v) parts.push_back(format_decimal(x));
    return join(parts, " ");
}

std::vector<double> split_numbers(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(parse_decimal(tok));
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

Classification classification_from(const std::string& s) {
    if (s == "strongly_efficient") return Classification::strongly_efficient;
    if (s == "weakly_efficient") return Classification::weakly_efficient;
    if (s == "inefficient") return Classification::inefficient;
    throw ParseError("unknown classification '" + s + "'", 0, 0);
}

Orientation orientation_from(const std::string& s) {
    if (s == "input") return Orientation::input;
    if (s == "output") return Orientation::output;
    throw ParseError("unknown orientation '" + s + "'", 0, 0);
}

bool on_frontier(const RadialResult& r, double eps) { return std::abs(r.score - 1.0) <= eps; }

// ---- ScoreTable ----------------------------------------------------------

constexpr const char* kScoreCsvHeader =
    "dmu,score,classification,peers,scenario,orientation,lambdas,input_slacks,output_slacks,"
    "relative_input_slacks,relative_output_slacks,input_weights,output_weights,te,ae,ce";

std::string score_text(const ScoreTable& table, const EmitOptions& options) {
    const bool output = table.orientation == Orientation::output;
    std::vector<const ScoreEntry*> rows;
    std::vector<std::size_t> ranks;
    if (options.ranking.empty()) {
        for (const auto& e : table.entries) rows.push_back(&e);
    } else {
        for (const auto& r : options.ranking) {
            rows.push_back(&table.entry(r.dmu_id));
            ranks.push_back(r.rank);
        }
    }
    const bool with_breakdown = std::any_of(table.entries.begin(), table.entries.end(),
                                            [](const ScoreEntry& e) { return e.breakdown.has_value(); });
    std::size_t id_width = 3;
    for (const auto* e : rows) id_width = std::max(id_width, e->radial.dmu_id.size());

    std::ostringstream os;
    os << "scenario: " << table.scenario_id << "  orientation: " << to_string(table.orientation) << '\n';
    if (!ranks.empty()) os << std::setw(4) << "rank" << "  ";
    os << std::left << std::setw(static_cast<int>(id_width)) << "dmu" << std::right;
    os << std::setw(12) << (output ? "sigma" : "theta");
    if (output) os << std::setw(10) << "1/sigma";
    os << "  " << std::left << std::setw(19) << "classification" << std::right;
    if (with_breakdown) os << std::setw(8) << "TE" << std::setw(8) << "AE" << std::setw(8) << "CE";
    os << "  peers\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i]->radial;
        if (!ranks.empty()) os << std::setw(4) << ranks[i] << "  ";
        os << std::left << std::setw(static_cast<int>(id_width)) << r.dmu_id << std::right;
        os << std::setw(12) << fixed(r.score);
        if (output) os << std::setw(10) << fixed(1.0 / r.score);
        os << "  " << std::left << std::setw(19) << to_string(r.classification) << std::right;
        if (with_breakdown) {
            if (const auto& b = rows[i]->breakdown) {
                os << std::setw(8) << fixed(b->te, 3) << std::setw(8) << fixed(b->ae, 3) << std::setw(8) << fixed(b->ce, 3);
            } else {
                os << std::setw(24) << "";
            }
        }
        os << "  " << (r.peers.empty() ? "-" : join(r.peers, ", ")) << '\n';
    }
    os << "\nslacks (input | output):\n";
    for (const auto* e : rows) {
        os << "  " << std::left << std::setw(static_cast<int>(id_width)) << e->radial.dmu_id << std::right << "  "
           << join_numbers(e->radial.input_slacks) << " | " << join_numbers(e->radial.output_slacks) << '\n';
    }
    os << "\nnote: scores are unique; intensity weights and peers come from the max-slack stage and may not be the\n"
          "only optimal choice.\n";
    os << "tolerances: pivot " << table.metadata.tolerances.pivot << ", feasibility " << table.metadata.tolerances.feasibility
       << ", gap " << table.metadata.tolerances.gap << ", efficiency " << table.metadata.efficiency_eps << '\n';
    return os.str();
}

std::string score_csv(const ScoreTable& table) {
    std::ostringstream os;
    os << kScoreCsvHeader << '\n';
    for (const auto& e : table.entries) {
        const auto& r = e.radial;
        os << r.dmu_id << ',' << format_decimal(r.score) << ',' << to_string(r.classification) << ','
           << join(r.peers, ";") << ',' << table.scenario_id << ',' << to_string(table.orientation) << ','
           << join_numbers(r.lambdas) << ',' << join_numbers(r.input_slacks) << ',' << join_numbers(r.output_slacks)
           << ',' << join_numbers(r.relative_input_slacks) << ',' << join_numbers(r.relative_output_slacks) << ','
           << join_numbers(r.input_weights) << ',' << join_numbers(r.output_weights) << ',';
        if (e.breakdown) {
            os << format_decimal(e.breakdown->te) << ',' << format_decimal(e.breakdown->ae) << ','
               << format_decimal(e.breakdown->ce);
        } else {
            os << ",,";
        }
        os << '\n';
    }
    return os.str();
}

json score_json(const ScoreTable& table) {
    json root;
    root["scenario"] = table.scenario_id;
    root["orientation"] = to_string(table.orientation);
    root["metadata"] = {{"pivot_tolerance", table.metadata.tolerances.pivot},
                        {"feasibility_tolerance", table.metadata.tolerances.feasibility},
                        {"gap_tolerance", table.metadata.tolerances.gap},
                        {"efficiency_eps", table.metadata.efficiency_eps},
                        {"peer_threshold", table.metadata.peer_threshold},
                        {"elapsed_ms", table.metadata.elapsed_ms}};
    root["entries"] = json::array();
    for (const auto& e : table.entries) {
        const auto& r = e.radial;
        json item{{"dmu", r.dmu_id},
                  {"score", r.score},
                  {"classification", to_string(r.classification)},
                  {"peers", r.peers},
                  {"lambdas", r.lambdas},
                  {"input_slacks", r.input_slacks},
                  {"output_slacks", r.output_slacks},
                  {"relative_input_slacks", r.relative_input_slacks},
                  {"relative_output_slacks", r.relative_output_slacks},
                  {"input_weights", r.input_weights},
                  {"output_weights", r.output_weights}};
        if (table.orientation == Orientation::output) item["inverse_score"] = 1.0 / r.score;
        item["breakdown"] = e.breakdown ? json{{"te", e.breakdown->te}, {"ae", e.breakdown->ae}, {"ce", e.breakdown->ce}}
                                        : json(nullptr);
        root["entries"].push_back(std::move(item));
    }
    return root;
}

std::string score_svg(const ScoreTable& table) {
    const double eps = table.metadata.efficiency_eps;
    const bool output = table.orientation == Orientation::output;
    const int bar_area = 400, label_width = 140, row_height = 28, top = 40;
    const int width = label_width + bar_area + 120;
    const int height = top + row_height * static_cast<int>(table.entries.size()) + 20;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" "
       << "viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "  <text x=\"10\" y=\"20\" font-size=\"14\">" << xml_escape(table.scenario_id) << " ("
       << to_string(table.orientation) << " orientation, bar = " << (output ? "1/sigma" : "theta") << ")</text>\n";
    int y = top;
    for (const auto& e : table.entries) {
        const auto& r = e.radial;
        const bool efficient = on_frontier(r, eps);
        const double efficiency = output ? 1.0 / r.score : r.score;
        const int length = std::max(1, static_cast<int>(std::lround(std::clamp(efficiency, 0.0, 1.0) * bar_area)));
        os << "  <text x=\"" << label_width - 8 << "\" y=\"" << y + 17 << "\" text-anchor=\"end\">"
           << xml_escape(r.dmu_id) << "</text>\n";
        os << "  <rect class=\"bar" << (efficient ? " efficient" : "") << "\" data-dmu=\"" << xml_escape(r.dmu_id)
           << "\" x=\"" << label_width << "\" y=\"" << y + 4 << "\" width=\"" << length << "\" height=\""
           << row_height - 8 << "\" fill=\"" << (efficient ? "#2e7d32" : "#9e9e9e") << "\"/>\n";
        os << "  <text x=\"" << label_width + length + 6 << "\" y=\"" << y + 17 << "\">" << fixed(r.score, 3)
           << (efficient ? " ★ efficient" : "") << "</text>\n";
        y += row_height;
    }
    os << "</svg>\n";
    return os.str();
}

// ---- comparison ------------------------------------------------------------

constexpr const char* kComparisonCsvHeader =
    "dmu,scenario,measure,computed,published,relative_deviation,verdict,informational";

std::string comparison_text(const ComparisonReport& report) {
    std::ostringstream os;
    os << "published score table comparison, tolerance " << fixed(report.tolerance * 100.0, 1) << "% relative\n";
    os << std::left << std::setw(13) << "dmu" << std::setw(16) << "scenario" << std::setw(14) << "measure" << std::right
       << std::setw(12) << "computed" << std::setw(12) << "published" << std::setw(10) << "dev %"
       << "  verdict\n";
    std::size_t matched = 0, mismatched = 0, inconsistent = 0, info = 0;
    for (const auto& c : report.cells) {
        os << std::left << std::setw(13) << c.dmu_id << std::setw(16) << c.scenario_id << std::setw(14)
           << to_string(c.measure) << std::right << std::setw(12) << fixed(c.computed) << std::setw(12)
           << format_decimal(c.published) << std::setw(10) << fixed(c.relative_deviation * 100.0, 1) << "  "
           << to_string(c.verdict) << (c.informational ? " (informational)" : "") << '\n';
        if (c.informational) {
            ++info;
        } else if (c.verdict == Verdict::match) {
            ++matched;
        } else if (c.verdict == Verdict::mismatch) {
            ++mismatched;
        } else {
            ++inconsistent;
        }
    }
    os << "\nchecked cells: " << matched << " match, " << mismatched << " mismatch, " << inconsistent
       << " paper-inconsistent; " << info << " informational (AE/CE at unit prices)\n";
    os << "elapsed: " << fixed(report.elapsed_ms, 2) << " ms\n";
    return os.str();
}

std::string comparison_csv(const ComparisonReport& report) {
    std::ostringstream os;
    os << kComparisonCsvHeader << '\n';
    for (const auto& c : report.cells) {
        os << c.dmu_id << ',' << c.scenario_id << ',' << to_string(c.measure) << ',' << format_decimal(c.computed) << ','
           << format_decimal(c.published) << ',' << format_decimal(c.relative_deviation) << ',' << to_string(c.verdict)
           << ',' << (c.informational ? "true" : "false") << '\n';
    }
    return os.str();
}

json comparison_json(const ComparisonReport& report) {
    json cells = json::array();
    for (const auto& c : report.cells) {
        cells.push_back({{"dmu", c.dmu_id},
                         {"scenario", c.scenario_id},
                         {"measure", to_string(c.measure)},
                         {"computed", c.computed},
                         {"published", c.published},
                         {"relative_deviation", c.relative_deviation},
                         {"verdict", to_string(c.verdict)},
                         {"informational", c.informational}});
    }
    return cells;
}

}  // namespace

std::string emit_report(const ScoreTable& table, Format format, const EmitOptions& options) {
    switch (format) {
        case Format::text: return score_text(table, options);
        case Format::csv: return score_csv(table);
        case Format::json: return score_json(table).dump(2) + '\n';
        case Format::svg: return score_svg(table);
    }
    unsupported(format, "score tables");
}

std::string emit_report(const ComparisonReport& report, Format format) {
    switch (format) {
        case Format::text: return comparison_text(report);
        case Format::csv: return comparison_csv(report);
        case Format::json: return comparison_json(report).dump(2) + '\n';
        case Format::svg: break;
    }
    unsupported(format, "comparison reports");
}

std::string emit_report(const std::vector<CostAuditRow>& audit, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::text:
            os << "cost per km audit: printed value against total cost / coverage per cell\n";
            os << std::left << std::setw(13) << "dmu" << std::right << std::setw(10) << "cost" << std::setw(12)
               << "coverage" << std::setw(10) << "printed" << std::setw(12) << "computed" << std::setw(10) << "dev %"
               << "  verdict\n";
            for (const auto& r : audit) {
                os << std::left << std::setw(13) << r.dmu_id << std::right << std::setw(10) << format_decimal(r.total_cost)
                   << std::setw(12) << format_decimal(r.coverage_km) << std::setw(10) << format_decimal(r.printed)
                   << std::setw(12) << fixed(r.computed, 3) << std::setw(10) << fixed(r.relative_deviation * 100.0, 1)
                   << "  " << (r.agrees ? "agrees" : "differs") << '\n';
            }
            return os.str();
        case Format::csv:
            os << "dmu,total_cost,coverage_km,printed_cost_per_km,computed_cost_per_km,relative_deviation,agrees\n";
            for (const auto& r : audit) {
                os << r.dmu_id << ',' << format_decimal(r.total_cost) << ',' << format_decimal(r.coverage_km) << ','
                   << format_decimal(r.printed) << ',' << format_decimal(r.computed) << ','
                   << format_decimal(r.relative_deviation) << ',' << (r.agrees ? "true" : "false") << '\n';
            }
            return os.str();
        case Format::json: {
            json rows = json::array();
            for (const auto& r : audit) {
                rows.push_back({{"dmu", r.dmu_id},
                                {"total_cost", r.total_cost},
                                {"coverage_km", r.coverage_km},
                                {"printed_cost_per_km", r.printed},
                                {"computed_cost_per_km", r.computed},
                                {"relative_deviation", r.relative_deviation},
                                {"agrees", r.agrees}});
            }
            return rows.dump(2) + '\n';
        }
        case Format::svg: break;
    }
    unsupported(format, "the cost audit");
}

ScoreTable parse_score_table(std::string_view text, Format format) {
    ScoreTable table;
    if (format == Format::json) {
        json root;
        try {
            root = json::parse(text.begin(), text.end());
            table.scenario_id = root.at("scenario").get<std::string>();
            table.orientation = orientation_from(root.at("orientation").get<std::string>());
            const auto& md = root.at("metadata");
            table.metadata.tolerances.pivot = md.at("pivot_tolerance").get<double>();
            table.metadata.tolerances.feasibility = md.at("feasibility_tolerance").get<double>();
            table.metadata.tolerances.gap = md.at("gap_tolerance").get<double>();
            table.metadata.efficiency_eps = md.at("efficiency_eps").get<double>();
            table.metadata.peer_threshold = md.at("peer_threshold").get<double>();
            table.metadata.elapsed_ms = md.at("elapsed_ms").get<double>();
            for (const auto& item : root.at("entries")) {
                ScoreEntry e;
                auto& r = e.radial;
                r.dmu_id = item.at("dmu").get<std::string>();
                r.orientation = table.orientation;
                r.score = item.at("score").get<double>();
                r.classification = classification_from(item.at("classification").get<std::string>());
                r.peers = item.at("peers").get<std::vector<std::string>>();
                r.lambdas = item.at("lambdas").get<std::vector<double>>();
                r.input_slacks = item.at("input_slacks").get<std::vector<double>>();
                r.output_slacks = item.at("output_slacks").get<std::vector<double>>();
                r.relative_input_slacks = item.at("relative_input_slacks").get<std::vector<double>>();
                r.relative_output_slacks = item.at("relative_output_slacks").get<std::vector<double>>();
                r.input_weights = item.at("input_weights").get<std::vector<double>>();
                r.output_weights = item.at("output_weights").get<std::vector<double>>();
                if (!item.at("breakdown").is_null()) {
                    const auto& b = item["breakdown"];
                    e.breakdown = EfficiencyBreakdown{r.dmu_id, b.at("te").get<double>(), b.at("ae").get<double>(),
                                                      b.at("ce").get<double>()};
                }
                table.entries.push_back(std::move(e));
            }
        } catch (const json::exception& e) {
            throw ParseError(std::string("score table JSON: ") + e.what(), 0, 0);
        }
        return table;
    }
    if (format != Format::csv) unsupported(format, "score table input");

    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != kScoreCsvHeader) throw ParseError("unexpected score table header", 1, 1);
            continue;
        }
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 16) throw ParseError("expected 16 fields", line_no, 1);
        ScoreEntry e;
        auto& r = e.radial;
        r.dmu_id = f[0];
        r.score = parse_decimal(f[1], line_no, 0);
        r.classification = classification_from(f[2]);
        r.peers = split(f[3], ';');
        table.scenario_id = f[4];
        table.orientation = orientation_from(f[5]);
        r.orientation = table.orientation;
        r.lambdas = split_numbers(f[6]);
        r.input_slacks = split_numbers(f[7]);
        r.output_slacks = split_numbers(f[8]);
        r.relative_input_slacks = split_numbers(f[9]);
        r.relative_output_slacks = split_numbers(f[10]);
        r.input_weights = split_numbers(f[11]);
        r.output_weights = split_numbers(f[12]);
        if (!f[13].empty()) {
            e.breakdown = EfficiencyBreakdown{r.dmu_id, parse_decimal(f[13]), parse_decimal(f[14]), parse_decimal(f[15])};
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

bool same_results(const ScoreTable& a, const ScoreTable& b) {
    if (a.scenario_id != b.scenario_id || a.orientation != b.orientation || a.entries.size() != b.entries.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        const auto& p = x.radial;
        const auto& q = y.radial;
        if (p.dmu_id != q.dmu_id || p.orientation != q.orientation || p.score != q.score ||
            p.classification != q.classification || p.peers != q.peers || p.lambdas != q.lambdas ||
            p.input_slacks != q.input_slacks || p.output_slacks != q.output_slacks ||
            p.relative_input_slacks != q.relative_input_slacks || p.relative_output_slacks != q.relative_output_slacks ||
            p.input_weights != q.input_weights || p.output_weights != q.output_weights) {
            return false;
        }
        if (x.breakdown.has_value() != y.breakdown.has_value()) return false;
        if (x.breakdown && (x.breakdown->te != y.breakdown->te || x.breakdown->ae != y.breakdown->ae ||
                            x.breakdown->ce != y.breakdown->ce)) {
            return false;
        }
    }
    return true;
}

}  // namespace dea::report
