#pragma once

// Grid files, renderers and JSON views.
//
// Grid text: one line per row, north first, '#' for a house and '.' for an
// empty lot. Spaces and tabs are ignored, blank lines skipped. An optional
// first line "ROWS COLS [free|bricked]" fixes the size and border.
// Grid JSON: {"schema":"1","rows":M,"cols":N,"boundary":"free","cells":[[1,0,0],...]};
// rows given as "#.." strings are accepted too.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "grid.hpp"
#include "solvers.hpp"

namespace settle {

inline constexpr const char* json_schema_version = "1";

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline bool is_blank(char c) { return c == ' ' || c == '\t'; }

struct Header {
  int rows = 0;
  int cols = 0;
  BoundaryMode boundary = BoundaryMode::free;
};

inline Header parse_header(const std::string& line, int lineno) {
  std::istringstream is(line);
  Header h;
  std::string word;
  if (!(is >> h.rows >> h.cols) || h.rows < 1 || h.cols < 1)
    throw parse_error(lineno, 1, "header must be 'ROWS COLS [free|bricked]' with positive sizes");
  if (is >> word) {
    try {
      h.boundary = parse_boundary(word);
    } catch (const std::invalid_argument&) {
      throw parse_error(lineno, static_cast<int>(line.find(word)) + 1, "unknown boundary '" + word + "'");
    }
  }
  if (is >> word) throw parse_error(lineno, static_cast<int>(line.find(word)) + 1, "trailing text in header");
  return h;
}

inline Configuration parse_grid_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; turn it into line and column.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1;
    int col = 1;
    for (std::size_t k = 0; k < at && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(line, col, "malformed JSON");
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw parse_error(1, 1, "JSON grid needs a \"cells\" array");
  // Rows are either arrays of 0/1 or '#'/'.' strings.
  std::vector<std::string> lines;
  for (const auto& row : j["cells"]) {
    if (row.is_string()) {
      lines.push_back(row.get<std::string>());
    } else if (row.is_array()) {
      std::string line;
      for (const auto& v : row) {
        if (v == 1) line.push_back('#');
        else if (v == 0) line.push_back('.');
        else throw parse_error(static_cast<int>(lines.size()) + 1, static_cast<int>(line.size()) + 1,
                               "JSON cell must be 0 or 1");
      }
      lines.push_back(std::move(line));
    } else {
      throw parse_error(static_cast<int>(lines.size()) + 1, 1, "JSON grid rows must be arrays or strings");
    }
  }
  BoundaryMode boundary = BoundaryMode::free;
  if (j.contains("boundary")) {
    try {
      boundary = parse_boundary(j["boundary"].get<std::string>());
    } catch (const std::exception&) {
      throw parse_error(1, 1, "unknown boundary in JSON grid");
    }
  }
  if (lines.empty()) throw parse_error(1, 1, "JSON grid has no rows");
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != lines.front().size())
      throw parse_error(static_cast<int>(r) + 1, 1, "ragged row in JSON grid");
    for (std::size_t c = 0; c < lines[r].size(); ++c)
      if (lines[r][c] != '#' && lines[r][c] != '.')
        throw parse_error(static_cast<int>(r) + 1, static_cast<int>(c) + 1, "cell must be '#' or '.'");
  }
  auto config = Configuration::from_strings(lines, boundary);
  if ((j.contains("rows") && j["rows"] != config.rows()) || (j.contains("cols") && j["cols"] != config.cols()))
    throw parse_error(1, 1, "JSON rows/cols disagree with the cells");
  return config;
}

}  // namespace detail

inline Configuration parse_grid(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') return detail::parse_grid_json(text);

  const auto lines = detail::split_lines(text);
  std::optional<detail::Header> header;
  std::vector<std::string> rows;
  int width_line = 0;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int lineno = static_cast<int>(k) + 1;
    const std::string& line = lines[k];
    std::size_t lead = 0;
    while (lead < line.size() && detail::is_blank(line[lead])) ++lead;
    if (lead == line.size()) continue;
    if (!header && rows.empty() && std::isdigit(static_cast<unsigned char>(line[lead]))) {
      header = detail::parse_header(line, lineno);
      continue;
    }
    std::string row;
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch == '#' || ch == '.') row.push_back(ch);
      else if (!detail::is_blank(ch))
        throw parse_error(lineno, static_cast<int>(c) + 1, std::string("unexpected character '") + ch + "'");
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error(lineno, 1,
                        "row has " + std::to_string(row.size()) + " cells, line " + std::to_string(width_line) +
                            " has " + std::to_string(rows.front().size()));
    if (rows.empty()) width_line = lineno;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error(static_cast<int>(lines.size()) + 1, 1, "no grid rows");
  if (header && (header->rows != static_cast<int>(rows.size()) || header->cols != static_cast<int>(rows.front().size())))
    throw parse_error(1, 1,
                      "header says " + std::to_string(header->rows) + "x" + std::to_string(header->cols) +
                          ", grid is " + std::to_string(rows.size()) + "x" + std::to_string(rows.front().size()));
  return Configuration::from_strings(rows, header ? header->boundary : BoundaryMode::free);
}

enum class RenderStyle { ascii_plain, ascii_unicode, svg };

inline RenderStyle parse_render_style(std::string_view s) {
  if (s == "plain" || s == "ascii") return RenderStyle::ascii_plain;
  if (s == "unicode") return RenderStyle::ascii_unicode;
  if (s == "svg") return RenderStyle::svg;
  throw std::invalid_argument("unknown render style '" + std::string(s) + "'");
}

// Every text row ends in '\n'.
inline std::string render(const Configuration& c, RenderStyle style = RenderStyle::ascii_plain) {
  std::string out;
  if (style == RenderStyle::ascii_plain) {
    for (const auto& row : c.to_strings()) out += row + "\n";
    return out;
  }
  if (style == RenderStyle::ascii_unicode) {
    for (int i = 1; i <= c.rows(); ++i) {
      for (int j = 1; j <= c.cols(); ++j) out += c.house(i, j) ? "■" : "·";
      out += "\n";
    }
    return out;
  }
  // Unit squares at 20px with a margin on the east for the north arrow.
  constexpr int cell = 20;
  const int width = c.cols() * cell + 40;
  const int height = std::max(c.rows() * cell + 2, cell * 2 + 20);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (int i = 1; i <= c.rows(); ++i)
    for (int j = 1; j <= c.cols(); ++j)
      os << "<rect x=\"" << (j - 1) * cell + 1 << "\" y=\"" << (i - 1) * cell + 1 << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << (c.house(i, j) ? "#808080" : "#ffffff")
         << "\" stroke=\"#000000\"/>\n";
  const int ax = c.cols() * cell + 20;
  os << "<path d=\"M" << ax << " " << cell * 2 << " L" << ax << " 8 M" << ax - 5 << " 14 L" << ax << " 4 L" << ax + 5
     << " 14\" stroke=\"#000000\" fill=\"none\"/>\n";
  os << "<text x=\"" << ax - 4 << "\" y=\"" << cell * 2 + 14 << "\" font-size=\"12\">N</text>\n";
  os << "</svg>\n";
  return os.str();
}

// Plain grid preceded by its size header, the format `solve --witness` writes.
inline std::string to_grid_file(const Configuration& c) {
  return std::to_string(c.rows()) + " " + std::to_string(c.cols()) + " " + std::string(to_string(c.boundary())) +
         "\n" + render(c);
}

inline nlohmann::json to_json(const Configuration& c) {
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 1; i <= c.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= c.cols(); ++j) row.push_back(c.house(i, j) ? 1 : 0);
    cells.push_back(std::move(row));
  }
  return nlohmann::json{{"schema", json_schema_version},
                        {"rows", c.rows()},
                        {"cols", c.cols()},
                        {"boundary", std::string(to_string(c.boundary()))},
                        {"occupancy", occupancy(c)},
                        {"cells", cells}};
}

inline std::string rational_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline nlohmann::json to_json(const BoundsReport& r) {
  auto tagged = [](auto value, const char* source) { return nlohmann::json{{"value", value}, {"source", source}}; };
  return nlohmann::json{{"schema", json_schema_version},
                        {"rows", r.dims.rows},
                        {"cols", r.dims.cols},
                        {"crude_lower", tagged(rational_string(r.crude_lower), BoundsReport::crude_source)},
                        {"crude_upper", tagged(rational_string(r.crude_upper), BoundsReport::crude_source)},
                        {"i_lower", tagged(r.i_lower, BoundsReport::i_lower_source)},
                        {"e_upper_block", tagged(r.e_upper_block, BoundsReport::block_source)},
                        {"e_upper_recurrence", tagged(r.e_upper_recurrence, BoundsReport::recurrence_source)}};
}

inline nlohmann::json to_json(const TableResult& t) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& line : t.values) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : line) row.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
    values.push_back(row);
  }
  return nlohmann::json{{"schema", json_schema_version},
                        {"objective", std::string(to_string(t.objective))},
                        {"boundary", std::string(to_string(t.boundary))},
                        {"rows", {t.rows.first, t.rows.last}},
                        {"cols", {t.cols.first, t.cols.last}},
                        {"values", values}};
}

// Reads a table written by to_json(TableResult).
inline TableResult table_from_json(const nlohmann::json& j) {
  TableResult t;
  t.objective = parse_objective(j.at("objective").get<std::string>());
  t.boundary = parse_boundary(j.at("boundary").get<std::string>());
  t.rows = {j.at("rows").at(0).get<int>(), j.at("rows").at(1).get<int>()};
  t.cols = {j.at("cols").at(0).get<int>(), j.at("cols").at(1).get<int>()};
  for (const auto& line : j.at("values")) {
    std::vector<std::optional<std::int64_t>> row;
    for (const auto& v : line) row.push_back(v.is_null() ? std::nullopt : std::optional(v.get<std::int64_t>()));
    if (row.size() != static_cast<std::size_t>(t.cols.last - t.cols.first + 1))
      throw std::invalid_argument("table row width disagrees with its column range");
    t.values.push_back(std::move(row));
    t.errors.emplace_back(t.values.back().size());
  }
  if (t.values.size() != static_cast<std::size_t>(t.rows.last - t.rows.first + 1))
    throw std::invalid_argument("table row count disagrees with its row range");
  return t;
}

}  // namespace settle
