#pragma once

// Relation tables: one row per target index with an integer coefficient tuple
// (basis coefficients followed by the target coefficient).
//
// CSV layout (RFC 4180 quoting):
//
//   # basis=(8,1,1) (7,2,1) (6,3,1)
//   target,coefficients
//   "(7,1,2)","(8,1,0,2)"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/crt_pipeline.hpp"
#include "fmzv/indices.hpp"

namespace fmzv {

struct RelationRow {
  Index target;
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const RelationRow&, const RelationRow&) = default;
};

struct RelationTable {
  std::vector<Index> basis;
  std::vector<RelationRow> rows;

  RelationRecord record(std::size_t row) const;
  friend bool operator==(const RelationTable&, const RelationTable&) = default;
};

RelationTable table_from_result(const PipelineResult& result);

// Basis (8,1,1), (7,2,1), (6,3,1) and the 509 weight-10 relations against it.
RelationTable builtin_weight10_table();

void write_relation_csv(std::ostream& out, const RelationTable& table);
RelationTable read_relation_csv(std::istream& in);

// "(a,b,...)" with signed entries.
std::vector<std::int64_t> parse_coefficients(std::string_view text);
std::string format_coefficients(const std::vector<std::int64_t>& coefficients);

// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view value);

}  // namespace fmzv
