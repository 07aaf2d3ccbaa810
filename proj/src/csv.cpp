#include "bsqdao/csv.hpp"

#include "bsqdao/errors.hpp"

namespace bsq {

std::string csv_escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> csv_split(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            cur.push_back(c);
            ++i;
        } else if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
        } else {
            cur.push_back(c);
            ++i;
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quoted CSV field");
    fields.push_back(std::move(cur));
    return fields;
}

std::string write_table(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<std::string>& schema) {
    std::string out;
    for (std::size_t i = 0; i < schema.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(schema[i]);
    }
    out.push_back('\n');
    for (const auto& row : rows) {
        if (row.size() != schema.size())
            throw SchemaMismatch("row has " + std::to_string(row.size()) + " cells, schema has " +
                                 std::to_string(schema.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_escape(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace bsq
