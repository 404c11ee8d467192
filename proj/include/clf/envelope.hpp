#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace clf {

enum class Format { json, csv, pretty };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format: " + s);
}

inline const char* format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    default: return "pretty";
  }
}

// binary64 rendered with 15 significant digits, fixed layout.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.14e", v);
  return buf;
}

inline std::string format_fixed(double v, int places) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

// Uniform result container for every CLI command. Exact rationals travel
// as "p/q" strings; decimal columns carry their precision in the column
// name. Rendering is deterministic: fixed column order, fixed number
// formatting, insertion-ordered JSON keys.
struct OutputEnvelope {
  // polynomial in s as ascending (exponent of s, "p/q") pairs
  using ExponentMap = std::vector<std::pair<int, std::string>>;
  using Cell = std::variant<long long, std::string, ExponentMap>;

  std::string command;
  Format format = Format::pretty;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string render() const {
    switch (format) {
      case Format::json: return to_json();
      case Format::csv: return to_csv();
      default: return to_pretty();
    }
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["format"] = format_name(format);
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      auto obj = nlohmann::ordered_json::object();
      for (size_t i = 0; i < columns.size(); ++i) {
        const Cell& cell = row.at(i);
        if (std::holds_alternative<long long>(cell)) {
          obj[columns[i]] = std::get<long long>(cell);
        } else if (std::holds_alternative<std::string>(cell)) {
          obj[columns[i]] = std::get<std::string>(cell);
        } else {
          auto poly = nlohmann::ordered_json::object();
          for (const auto& [e, q] : std::get<ExponentMap>(cell)) {
            poly[std::to_string(e)] = q;
          }
          obj[columns[i]] = poly;
        }
      }
      rows_json.push_back(obj);
    }
    j["rows"] = rows_json;
    return j.dump() + "\n";
  }

  std::string to_csv() const {
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += csv_quote(columns[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
      for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(cell_text(row.at(i)));
      }
      out += '\n';
    }
    return out;
  }

  std::string to_pretty() const {
    std::string out = "command: " + command + "\n";
    for (const auto& [k, v] : parameters) out += k + ": " + v + "\n";
    std::vector<size_t> width(columns.size());
    for (size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    std::vector<std::vector<std::string>> texts;
    for (const auto& row : rows) {
      std::vector<std::string> t;
      for (size_t i = 0; i < columns.size(); ++i) {
        t.push_back(cell_text(row.at(i)));
        width[i] = std::max(width[i], t.back().size());
      }
      texts.push_back(std::move(t));
    }
    auto emit_line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += "  ";
        out += cells[i];
        if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
      }
      out += '\n';
    };
    emit_line(columns);
    for (const auto& t : texts) emit_line(t);
    return out;
  }

private:
  static std::string cell_text(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    std::string t;
    for (const auto& [e, q] : std::get<ExponentMap>(cell)) {
      if (!t.empty()) t += "; ";
      t += std::to_string(e) + ":" + q;
    }
    return t;
  }

  static std::string csv_quote(const std::string& s) {
    const bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += "\"\"";
      else q += c;
    }
    q += '"';
    return q;
  }
};

}  // namespace clf
