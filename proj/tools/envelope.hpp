#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gfkit::cli {

using nlohmann::json;

enum class Format { Json, Csv, Text };

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

struct Envelope {
    bool ok = true;
    std::string meta;
    std::string message;  // errors only
    std::optional<std::string> value_exact;
    std::optional<double> value_float;
    std::optional<Table> table;

    static Envelope error(std::string msg) {
        Envelope e;
        e.ok = false;
        e.message = std::move(msg);
        return e;
    }
};

// Usage problems detected after parsing, reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Envelope& e);
std::string render(const Envelope& e, Format fmt);
std::string cell_text(const json& v);

}  // namespace gfkit::cli
