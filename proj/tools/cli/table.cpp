#include "table.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gjt::cli {

namespace {

std::string list_text(const IntList& list) {
  std::string s = "{";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(list[i]);
  }
  return s + "}";
}

std::string plain_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else {
          return list_text(v);
        }
      },
      cell);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::ordered_json json_value(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected table, csv or jsonl)");
}

void emit(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::csv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(plain_text(row[c]));
        out << '\n';
      }
      break;
    }
    case Format::jsonl: {
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_value(row[c]);
        out << obj.dump() << '\n';
      }
      break;
    }
    case Format::table: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
      std::vector<std::vector<std::string>> text;
      for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          line.push_back(plain_text(row[c]));
          width[c] = std::max(width[c], line.back().size());
        }
      }
      auto print = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) line += "  ";
          line += cells[c];
          if (c + 1 < cells.size()) line.append(width[c] - cells[c].size(), ' ');
        }
        out << line << '\n';
      };
      print(table.columns);
      for (const auto& line : text) print(line);
      break;
    }
  }
}

}  // namespace gjt::cli
