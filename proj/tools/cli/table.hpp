#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gjt/rational.hpp"

namespace gjt::cli {

enum class Format { table, csv, jsonl };

Format parse_format(std::string_view name);

/// An integer list such as L, or one witness set.
using IntList = std::vector<int>;

/// monostate renders as an empty field (null in JSON).
using Cell = std::variant<std::monostate, long, bool, std::string, Rational, IntList>;

/// Rows of typed cells under fixed lowercase column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Table: aligned columns. CSV: RFC 4180 quoting, rationals "p/q", lists "{a,b}".
/// JSONL: one object per row, keys in column order, rationals as "p/q" strings.
void emit(const Table& table, Format format, std::ostream& out);

}  // namespace gjt::cli
