#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dea/dataset.hpp"
#include "dea/error.hpp"

namespace dea {

using nlohmann::json;

double parse_decimal(std::string_view text, std::size_t line, std::size_t column) {
    auto bad = [&](const std::string& why) -> double {
        throw ParseError("invalid number '" + std::string(text) + "': " + why, line, column);
    };
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    const std::size_t mantissa = i;
    std::size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    }
    if (digits == 0) return bad("expected digits");
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
        const std::size_t exp_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == exp_start) return bad("empty exponent");
    }
    if (i != n) return bad("unexpected character '" + std::string(1, text[i]) + "'");

    double value = 0.0;
    const char* first = text.data() + mantissa;
    const char* last = text.data() + n;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) return bad("out of range");
    if (ec != std::errc() || ptr != last) return bad("not a decimal number");
    return text[0] == '-' ? -value : value;
}

std::string format_decimal(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

namespace {

struct CsvField {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<CsvField> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<CsvField> fields;
    std::size_t i = 0;
    for (;;) {
        CsvField field{{}, i + 1};
        if (i < line.size() && line[i] == '"') {
            ++i;
            for (;;) {
                if (i >= line.size()) throw ParseError("unterminated quoted field", line_no, field.column);
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.text += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field.text += line[i++];
            }
            if (i < line.size() && line[i] != ',') throw ParseError("text after closing quote", line_no, i + 1);
        } else {
            const auto end = line.find(',', i);
            const auto stop = end == std::string_view::npos ? line.size() : end;
            auto raw = line.substr(i, stop - i);
            // Blanks around unquoted fields are not significant.
            const auto b = raw.find_first_not_of(" \t");
            if (b != std::string_view::npos) {
                field.column = i + b + 1;
                field.text = std::string(raw.substr(b, raw.find_last_not_of(" \t") - b + 1));
            }
            i = stop;
        }
        fields.push_back(std::move(field));
        if (i >= line.size()) break;
        ++i;  // comma
    }
    return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) lines.pop_back();
    return lines;
}

std::string csv_quote(const std::string& s) {
    const bool padded = !s.empty() && (s.front() == ' ' || s.back() == ' ');
    if (s.find_first_of(",\"\n\r") == std::string::npos && !padded) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

Dataset parse_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty CSV input", 1, 1);
    const auto header = split_csv_line(lines[0], 1);
    if (header[0].text != "dmu") throw ParseError("first header field must be 'dmu'", 1, 1);

    Dataset d;
    for (std::size_t k = 1; k < header.size(); ++k) {
        if (header[k].text.empty()) throw ParseError("empty metric id in header", 1, header[k].column);
        d.metrics.push_back({header[k].text, header[k].text, "", MetricHint::neutral});
    }
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        if (lines[ln].find_first_not_of(" \t") == std::string_view::npos) {
            throw ParseError("blank line inside data", line_no, 1);
        }
        const auto fields = split_csv_line(lines[ln], line_no);
        if (fields[0].text.empty()) throw ParseError("missing DMU id", line_no, 1);
        DmuRecord rec{fields[0].text, fields[0].text, {}};
        if (fields.size() > header.size()) {
            throw ParseError("row has " + std::to_string(fields.size()) + " fields, header has " +
                                 std::to_string(header.size()),
                             line_no, fields[header.size()].column);
        }
        for (std::size_t k = 1; k < header.size(); ++k) {
            if (k >= fields.size() || fields[k].text.empty()) {
                throw Error(ErrorCode::missing_value, "line " + std::to_string(line_no) + ": DMU '" + rec.id +
                                                          "' has no value for metric '" + d.metrics[k - 1].id + "'");
            }
            const double v = parse_decimal(fields[k].text, line_no, fields[k].column);
            if (v < 0.0) {
                throw Error(ErrorCode::negative_value, "line " + std::to_string(line_no) + ": DMU '" + rec.id +
                                                           "' metric '" + d.metrics[k - 1].id + "' is negative (" +
                                                           fields[k].text + ")");
            }
            rec.values.push_back(v);
        }
        d.dmus.push_back(std::move(rec));
    }
    d.validate();
    return d;
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("JSON schema: " + what, 0, 0); }

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(e.what(), line, col);
    }
}

std::string get_string(const json& obj, const char* key, bool required) {
    if (!obj.contains(key)) {
        if (required) schema_error(std::string("missing key '") + key + "'");
        return {};
    }
    if (!obj[key].is_string()) schema_error(std::string("key '") + key + "' must be a string");
    return obj[key].get<std::string>();
}

MetricHint parse_hint(const std::string& s) {
    if (s.empty() || s == "neutral") return MetricHint::neutral;
    if (s == "input" || s == "input-like") return MetricHint::input_like;
    if (s == "output" || s == "output-like") return MetricHint::output_like;
    schema_error("unknown metric hint '" + s + "'");
}

double json_value(const json& v, const std::string& dmu, const std::string& metric) {
    if (v.is_null()) {
        throw Error(ErrorCode::missing_value, "DMU '" + dmu + "' has no value for metric '" + metric + "'");
    }
    if (!v.is_number()) schema_error("value of DMU '" + dmu + "' metric '" + metric + "' must be a number");
    const double x = v.get<double>();
    if (x < 0.0) {
        throw Error(ErrorCode::negative_value, "DMU '" + dmu + "' metric '" + metric + "' is negative (" +
                                                   format_decimal(x) + ")");
    }
    return x;
}

Dataset dataset_from_json(const json& root) {
    if (!root.is_object()) schema_error("top level must be an object");
    if (!root.contains("metrics") || !root["metrics"].is_array()) schema_error("'metrics' must be an array");
    if (!root.contains("dmus") || !root["dmus"].is_array()) schema_error("'dmus' must be an array");
    Dataset d;
    if (root.contains("provenance") && root["provenance"].is_string()) d.provenance = root["provenance"];
    for (const auto& m : root["metrics"]) {
        if (!m.is_object()) schema_error("metric entries must be objects");
        MetricSpec spec;
        spec.id = get_string(m, "id", true);
        spec.name = get_string(m, "name", false);
        if (spec.name.empty()) spec.name = spec.id;
        spec.unit = get_string(m, "unit", false);
        spec.hint = parse_hint(get_string(m, "hint", false));
        d.metrics.push_back(std::move(spec));
    }
    for (const auto& entry : root["dmus"]) {
        if (!entry.is_object()) schema_error("DMU entries must be objects");
        DmuRecord rec;
        rec.id = get_string(entry, "id", true);
        rec.name = get_string(entry, "name", false);
        if (rec.name.empty()) rec.name = rec.id;
        if (!entry.contains("values")) schema_error("DMU '" + rec.id + "' has no 'values'");
        const auto& values = entry["values"];
        if (values.is_array()) {
            if (values.size() > d.metrics.size()) schema_error("DMU '" + rec.id + "' has more values than metrics");
            for (std::size_t k = 0; k < d.metrics.size(); ++k) {
                if (k >= values.size()) {
                    throw Error(ErrorCode::missing_value,
                                "DMU '" + rec.id + "' has no value for metric '" + d.metrics[k].id + "'");
                }
                rec.values.push_back(json_value(values[k], rec.id, d.metrics[k].id));
            }
        } else if (values.is_object()) {
            for (const auto& m : d.metrics) {
                if (!values.contains(m.id)) {
                    throw Error(ErrorCode::missing_value, "DMU '" + rec.id + "' has no value for metric '" + m.id + "'");
                }
                rec.values.push_back(json_value(values[m.id], rec.id, m.id));
            }
            for (const auto& [key, _] : values.items()) {
                if (!d.metric_index(key)) throw Error(ErrorCode::unknown_metric, "DMU '" + rec.id + "' names unknown metric '" + key + "'");
            }
        } else {
            schema_error("DMU '" + rec.id + "' values must be an array or object");
        }
        d.dmus.push_back(std::move(rec));
    }
    d.validate();
    return d;
}

std::vector<Scenario> scenarios_from_json(const json& list) {
    if (!list.is_array()) schema_error("'scenarios' must be an array");
    std::vector<Scenario> out;
    for (const auto& s : list) {
        if (!s.is_object()) schema_error("scenario entries must be objects");
        Scenario sc;
        sc.id = get_string(s, "id", true);
        sc.description = get_string(s, "description", false);
        for (const char* key : {"inputs", "outputs"}) {
            if (!s.contains(key) || !s[key].is_array()) schema_error("scenario '" + sc.id + "' needs '" + key + "' array");
            auto& dst = std::string_view(key) == "inputs" ? sc.inputs : sc.outputs;
            for (const auto& m : s[key]) {
                if (!m.is_string()) schema_error("scenario '" + sc.id + "' metric ids must be strings");
                dst.push_back(m.get<std::string>());
            }
        }
        if (s.contains("prices") && !s["prices"].is_null()) {
            if (!s["prices"].is_array()) schema_error("scenario '" + sc.id + "' prices must be an array");
            std::vector<double> prices;
            for (const auto& p : s["prices"]) {
                if (!p.is_number()) schema_error("scenario '" + sc.id + "' prices must be numbers");
                prices.push_back(p.get<double>());
            }
            sc.prices = std::move(prices);
        }
        sc.validate();
        out.push_back(std::move(sc));
    }
    return out;
}

json scenarios_to_json(const std::vector<Scenario>& scenarios) {
    json list = json::array();
    for (const auto& s : scenarios) {
        json obj{{"id", s.id}, {"inputs", s.inputs}, {"outputs", s.outputs}};
        if (s.prices) obj["prices"] = *s.prices;
        if (!s.description.empty()) obj["description"] = s.description;
        list.push_back(std::move(obj));
    }
    return list;
}

}  // namespace

Dataset parse_dataset(std::string_view text, DataFormat format) {
    if (format == DataFormat::csv) return parse_csv(text);
    return dataset_from_json(parse_json_text(text));
}

std::string serialize_dataset(const Dataset& dataset, DataFormat format) {
    if (format == DataFormat::csv) {
        std::string out = "dmu";
        for (const auto& m : dataset.metrics) out += "," + csv_quote(m.id);
        out += '\n';
        for (const auto& d : dataset.dmus) {
            out += csv_quote(d.id);
            for (double v : d.values) out += "," + format_decimal(v);
            out += '\n';
        }
        return out;
    }
    json root;
    if (!dataset.provenance.empty()) root["provenance"] = dataset.provenance;
    root["metrics"] = json::array();
    for (const auto& m : dataset.metrics) {
        root["metrics"].push_back({{"id", m.id}, {"name", m.name}, {"unit", m.unit}, {"hint", to_string(m.hint)}});
    }
    root["dmus"] = json::array();
    for (const auto& d : dataset.dmus) root["dmus"].push_back({{"id", d.id}, {"name", d.name}, {"values", d.values}});
    return root.dump(2) + '\n';
}

std::vector<Scenario> parse_scenarios(std::string_view json_text) {
    const auto root = parse_json_text(json_text);
    if (root.is_array()) return scenarios_from_json(root);
    if (root.is_object() && root.contains("scenarios")) return scenarios_from_json(root["scenarios"]);
    schema_error("expected a 'scenarios' array");
}

std::string serialize_scenarios(const std::vector<Scenario>& scenarios) {
    return json{{"scenarios", scenarios_to_json(scenarios)}}.dump(2) + '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DataBundle load_data_file(const std::filesystem::path& path) {
    const auto text = read_text_file(path);
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool is_json = ext == ".json" || (ext != ".csv" && text.find_first_not_of(" \t\r\n") != std::string::npos &&
                                            text[text.find_first_not_of(" \t\r\n")] == '{');
    DataBundle bundle;
    if (!is_json) {
        bundle.dataset = parse_dataset(text, DataFormat::csv);
        return bundle;
    }
    const auto root = parse_json_text(text);
    bundle.dataset = dataset_from_json(root);
    if (root.contains("scenarios")) bundle.scenarios = scenarios_from_json(root["scenarios"]);
    return bundle;
}

}  // namespace dea
