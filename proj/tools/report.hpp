#pragma once

// Flat key/value records rendered as text, CSV (RFC 4180, LF endings) or
// JSON. Exact rationals are written as "p/q" strings next to a decimal
// field whose key carries the suffix "_approx".

#include "thetalab/combinat.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace thetalab::cli {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);

class Record {
public:
    explicit Record(int precision = 12) : precision_(precision) {}

    Record& add(const std::string& key, const std::string& value);
    Record& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
    Record& add(const std::string& key, long value);
    Record& add(const std::string& key, int value) { return add(key, static_cast<long>(value)); }
    Record& add(const std::string& key, std::size_t value) { return add(key, static_cast<long>(value)); }
    Record& add(const std::string& key, bool value);
    Record& add(const std::string& key, const BigInt& value);
    /// Adds `key` (exact) and `key_approx` (decimal).
    Record& add(const std::string& key, const Rational& value);
    Record& add_approx(const std::string& key, double value);

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

private:
    int precision_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// Single record: "key: value" lines, one-row CSV, or a JSON object.
void write_record(std::ostream& out, const Record& record, Format format);

/// Table: CSV with header (also used for Text), or a JSON array of objects.
void write_table(std::ostream& out, const std::vector<Record>& rows, Format format);

std::string csv_escape(const std::string& field);

}  // namespace thetalab::cli
