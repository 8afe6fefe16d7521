#include "fmzv/relation_table.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "fmzv/error.hpp"

namespace fmzv {

RelationRecord RelationTable::record(std::size_t row) const {
  return RelationRecord{basis, rows.at(row).target, rows.at(row).coefficients};
}

RelationTable table_from_result(const PipelineResult& result) {
  RelationTable table;
  table.basis = result.basis;
  for (const RelationRecord& rec : result.relations) table.rows.push_back({rec.target, rec.coefficients});
  return table;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line: " + std::string(line));
  return fields;
}

std::vector<std::int64_t> parse_coefficients(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("coefficients must be parenthesised: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad coefficient '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string format_coefficients(const std::vector<std::int64_t>& coefficients) {
  std::string out = "(";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coefficients[i]);
  }
  return out + ")";
}

void write_relation_csv(std::ostream& out, const RelationTable& table) {
  out << "# basis=";
  for (std::size_t i = 0; i < table.basis.size(); ++i) out << (i ? " " : "") << table.basis[i].to_string();
  out << "\ntarget,coefficients\n";
  for (const RelationRow& row : table.rows) {
    out << csv_field(row.target.to_string()) << ',' << csv_field(format_coefficients(row.coefficients)) << '\n';
  }
}

RelationTable read_relation_csv(std::istream& in) {
  RelationTable table;
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# basis=";
      if (line.rfind(tag, 0) == 0) {
        std::istringstream words(line.substr(tag.size()));
        std::string word;
        while (words >> word) table.basis.push_back(parse_index(word));
      }
      continue;
    }
    if (!header) {
      if (line != "target,coefficients") throw ParseError("expected header 'target,coefficients', got '" + line + "'");
      header = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 2 fields");
    RelationRow row{parse_index(fields[0]), parse_coefficients(fields[1])};
    if (row.coefficients.size() != table.basis.size() + 1) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(table.basis.size() + 1) +
                       " coefficients");
    }
    table.rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("relation table has no header");
  return table;
}

}  // namespace fmzv
