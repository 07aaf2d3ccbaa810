#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bsq {

/// Quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

/// Splits one CSV record; handles quoted fields with doubled quotes.
/// Throws ParseError on unterminated quotes.
std::vector<std::string> csv_split(std::string_view line, std::size_t line_no);

/// Deterministic CSV bytes: header row, then rows in the given order. Every
/// row must have exactly one cell per schema column (SchemaMismatch otherwise).
std::string write_table(const std::vector<std::vector<std::string>>& rows,
                        const std::vector<std::string>& schema);

}  // namespace bsq
