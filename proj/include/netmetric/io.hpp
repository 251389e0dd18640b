#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "netmetric/barycentric.hpp"
#include "netmetric/error.hpp"
#include "netmetric/interior.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/network.hpp"

namespace netmetric {

using json = nlohmann::json;

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path.string() + "'");
}

namespace detail {

inline std::string position(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, position(line, column) + ": " + e.what());
  }
}

inline Matrix matrix_from_json(const json& j, std::string_view field) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "'" + std::string(field) + "' must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "'" + std::string(field) + "' rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorKind::ParseError, "'" + std::string(field) + "' entries must be numbers");
      out.push_back(v.get<double>());
    }
    if (out.size() != rows.front().size())
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(rows.size() - 1) + " of '" +
                                                std::string(field) + "' has " + std::to_string(out.size()) +
                                                " entries, expected " + std::to_string(rows.front().size()));
  }
  return Matrix::from_rows(rows);
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline std::vector<std::string> labels_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "'labels' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "'labels' must be an array of strings");
    labels.push_back(v.get<std::string>());
  }
  return labels;
}

inline std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

struct CsvCell {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<std::vector<CsvCell>> split_csv(std::string_view text) {
  std::vector<std::vector<CsvCell>> rows;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++line;
    start = end + 1;
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto& row = rows.emplace_back();
    std::size_t col_start = 0;
    for (;;) {
      const std::size_t comma = raw.find(',', col_start);
      const std::size_t stop = comma == std::string_view::npos ? raw.size() : comma;
      row.push_back({trim(raw.substr(col_start, stop - col_start)), line, col_start + 1});
      if (comma == std::string_view::npos) break;
      col_start = comma + 1;
    }
    if (end == text.size()) break;
  }
  return rows;
}

inline double parse_cell(const CsvCell& cell) {
  double v = 0.0;
  const char* first = cell.text.data();
  const char* last = first + cell.text.size();
  const auto res = std::from_chars(first, last, v);
  if (cell.text.empty() || res.ec != std::errc{} || res.ptr != last)
    throw Error(ErrorKind::ParseError, position(cell.line, cell.column) + ": '" + cell.text + "' is not a number");
  return v;
}

}  // namespace detail

/// Labels from the header row plus the numeric matrix below it. No network
/// validation, so it also reads distance-matrix outputs.
struct LabelledMatrix {
  std::vector<std::string> labels;
  Matrix values;
};

inline LabelledMatrix parse_matrix_csv(std::string_view text) {
  const auto rows = detail::split_csv(text);
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty CSV");
  LabelledMatrix out;
  for (const auto& cell : rows.front()) out.labels.push_back(cell.text);
  std::vector<std::vector<double>> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != out.labels.size())
      throw Error(ErrorKind::ShapeMismatch, detail::position(rows[r].front().line, 1) + ": row has " +
                                                std::to_string(rows[r].size()) + " entries, expected " +
                                                std::to_string(out.labels.size()));
    auto& row = values.emplace_back();
    for (const auto& cell : rows[r]) row.push_back(detail::parse_cell(cell));
  }
  if (values.empty()) throw Error(ErrorKind::ShapeMismatch, "CSV has a header but no rows");
  out.values = Matrix::from_rows(values);
  return out;
}

inline std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t j = 0; j < labels.size(); ++j) out += (j ? "," : "") + labels[j];
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + format_number(m(i, j));
    out += '\n';
  }
  return out;
}

inline Network parse_network_json(std::string_view text) {
  const json j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("dissim"))
    throw Error(ErrorKind::ParseError, "expected an object with 'labels' and 'dissim'");
  auto labels = j.contains("labels") ? detail::labels_from_json(j.at("labels")) : std::vector<std::string>{};
  return Network::validate(detail::matrix_from_json(j.at("dissim"), "dissim"), std::move(labels));
}

inline Network parse_network_csv(std::string_view text) {
  auto lm = parse_matrix_csv(text);
  return Network::validate(std::move(lm.values), std::move(lm.labels));
}

inline json network_to_json(const Network& net) {
  return json{{"labels", net.labels()}, {"dissim", detail::matrix_to_json(net.dissim())}};
}

inline std::string network_to_json_text(const Network& net) { return network_to_json(net).dump(2) + "\n"; }

inline std::string network_to_csv(const Network& net) { return matrix_to_csv(net.dissim(), net.labels()); }

/// Reads JSON for *.json, CSV for *.csv, otherwise sniffs the first character.
inline Network load_network(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  const auto ext = path.extension().string();
  if (ext == ".json") return parse_network_json(text);
  if (ext == ".csv") return parse_network_csv(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? parse_network_json(text) : parse_network_csv(text);
}

inline void save_network(const Network& net, const std::filesystem::path& path) {
  write_text(path, path.extension() == ".csv" ? network_to_csv(net) : network_to_json_text(net));
}

/// Network JSON plus a "points" array of barycentric tuples.
inline std::string sampled_space_to_json_text(const SampledSpace& space) {
  json points = json::array();
  for (const auto& p : space.points()) points.push_back(p.weights());
  json j{{"labels", space.labels()}, {"dissim", detail::matrix_to_json(space.dissim())}, {"points", points}};
  return j.dump(2) + "\n";
}

inline SampledSpace parse_sampled_space_json(std::string_view text) {
  const json j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("dissim") || !j.contains("points") || !j.contains("labels"))
    throw Error(ErrorKind::ParseError, "expected an object with 'labels', 'dissim' and 'points'");
  auto labels = detail::labels_from_json(j.at("labels"));
  Matrix dissim = detail::matrix_from_json(j.at("dissim"), "dissim");
  const Matrix raw_points = detail::matrix_from_json(j.at("points"), "points");
  std::vector<BarycentricPoint> points;
  for (std::size_t i = 0; i < raw_points.rows(); ++i)
    points.emplace_back(std::vector<double>(raw_points.row(i).begin(), raw_points.row(i).end()));
  const std::size_t n = raw_points.cols();
  if (n == 0 || n > labels.size() || dissim.rows() < n)
    throw Error(ErrorKind::ShapeMismatch, "points do not fit the stored matrix");
  Matrix base(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) base(a, b) = dissim(a, b);
  auto net = Network::validate(std::move(base), std::vector<std::string>(labels.begin(), labels.begin() + n));
  return SampledSpace::assemble(std::move(net), std::move(points), std::move(labels), std::move(dissim));
}

/// One row per point: name, one column per axis, class label.
inline std::string embedding_to_csv(const Matrix& coords, const std::vector<std::string>& names,
                                    const std::vector<std::string>& classes) {
  static constexpr const char* kAxes[] = {"x", "y", "z"};
  std::string out = "name";
  for (std::size_t l = 0; l < coords.cols(); ++l)
    out += "," + (l < 3 ? std::string(kAxes[l]) : "axis" + std::to_string(l));
  out += ",model\n";
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    out += names[i];
    for (std::size_t l = 0; l < coords.cols(); ++l) out += "," + format_number(coords(i, l));
    out += "," + classes[i] + "\n";
  }
  return out;
}

struct EmbeddingTable {
  std::vector<std::string> names;
  Matrix coords;
  std::vector<std::string> classes;
};

inline EmbeddingTable parse_embedding_csv(std::string_view text) {
  const auto rows = detail::split_csv(text);
  if (rows.size() < 2 || rows.front().size() < 3) throw Error(ErrorKind::ParseError, "embedding CSV needs a header and rows");
  const std::size_t dim = rows.front().size() - 2;
  EmbeddingTable out{{}, Matrix(rows.size() - 1, dim), {}};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != dim + 2)
      throw Error(ErrorKind::ShapeMismatch, detail::position(rows[r].front().line, 1) + ": wrong column count");
    out.names.push_back(rows[r].front().text);
    for (std::size_t l = 0; l < dim; ++l) out.coords(r - 1, l) = detail::parse_cell(rows[r][l + 1]);
    out.classes.push_back(rows[r].back().text);
  }
  return out;
}

}  // namespace netmetric
