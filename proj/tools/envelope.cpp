#include "envelope.hpp"

#include <sstream>

namespace gfkit::cli {

json to_json(const Envelope& e) {
    json j = json::object();  // std::map underneath, so keys come out sorted
    if (!e.ok) {
        j["status"] = "error";
        j["message"] = e.message;
        return j;
    }
    j["status"] = "ok";
    j["meta"] = e.meta;
    if (e.value_exact) j["value_exact"] = *e.value_exact;
    if (e.value_float) j["value_float"] = *e.value_float;
    if (e.table) j["table"] = {{"columns", e.table->columns}, {"rows", e.table->rows}};
    return j;
}

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

namespace {

std::string csv_cell(const json& v) {
    std::string s = cell_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<json>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
}

}  // namespace

std::string render(const Envelope& e, Format fmt) {
    std::ostringstream os;
    switch (fmt) {
        case Format::Json:
            os << to_json(e).dump() << '\n';
            break;
        case Format::Csv:
            if (!e.ok) {
                csv_line(os, {"status", "message"});
                csv_line(os, {"error", e.message});
            } else if (e.table) {
                csv_line(os, std::vector<json>(e.table->columns.begin(), e.table->columns.end()));
                for (const auto& r : e.table->rows) csv_line(os, r);
            } else {
                csv_line(os, {"key", "value"});
                csv_line(os, {"meta", e.meta});
                csv_line(os, {"status", "ok"});
                if (e.value_exact) csv_line(os, {"value_exact", *e.value_exact});
                if (e.value_float) csv_line(os, {"value_float", *e.value_float});
            }
            break;
        case Format::Text:
            if (!e.ok) {
                os << "error: " << e.message << '\n';
                break;
            }
            if (e.value_exact) os << "exact: " << *e.value_exact << '\n';
            if (e.value_float) os << "float: " << json(*e.value_float).dump() << '\n';
            if (e.table) {
                for (size_t i = 0; i < e.table->columns.size(); ++i) os << (i ? "\t" : "") << e.table->columns[i];
                os << '\n';
                for (const auto& r : e.table->rows) {
                    for (size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << cell_text(r[i]);
                    os << '\n';
                }
            }
            os << "# " << e.meta << '\n';
            break;
    }
    return os.str();
}

}  // namespace gfkit::cli
