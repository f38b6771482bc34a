#include "report.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace thetalab::cli {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

Record& Record::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
}

Record& Record::add(const std::string& key, long value) { return add(key, std::to_string(value)); }

Record& Record::add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

Record& Record::add(const std::string& key, const BigInt& value) { return add(key, value.get_str()); }

Record& Record::add(const std::string& key, const Rational& value) {
    add(key, to_string(value));
    return add(key + "_approx", to_decimal(value, precision_));
}

Record& Record::add_approx(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision_, value);
    return add(key + "_approx", std::string(buf));
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
}

nlohmann::ordered_json to_json(const Record& r) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) obj[k] = v;
    return obj;
}

}  // namespace

void write_record(std::ostream& out, const Record& record, Format format) {
    switch (format) {
        case Format::Text:
            for (const auto& [k, v] : record.fields()) out << k << ": " << v << '\n';
            break;
        case Format::Csv:
            write_table(out, {record}, Format::Csv);
            break;
        case Format::Json:
            out << to_json(record).dump(2) << '\n';
            break;
    }
}

void write_table(std::ostream& out, const std::vector<Record>& rows, Format format) {
    if (format == Format::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Record& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
        return;
    }
    if (rows.empty()) return;
    std::vector<std::string> header;
    for (const auto& f : rows.front().fields()) header.push_back(f.first);
    write_csv_row(out, header);
    for (const Record& r : rows) {
        std::vector<std::string> cells;
        for (const auto& f : r.fields()) cells.push_back(f.second);
        write_csv_row(out, cells);
    }
}

}  // namespace thetalab::cli
