#ifndef ZONEST_IO_HPP_
#define ZONEST_IO_HPP_

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonest/errors.hpp"
#include "zonest/sets.hpp"

namespace zonest {

using nlohmann::json;

inline json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Eigen::VectorXd vector_from_json(const json& a) {
  if (!a.is_array()) throw ParseError("expected an array of numbers");
  Eigen::VectorXd v(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i].get<double>();
  return v;
}

inline Eigen::MatrixXd matrix_from_json(const json& a) {
  if (!a.is_array()) throw ParseError("expected an array of rows");
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return Eigen::MatrixXd(0, 0);
  const int cols = static_cast<int>(a[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != cols)
      throw ParseError("ragged matrix rows");
    for (int j = 0; j < cols; ++j)
      m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

inline json to_json(const Zonotope& z) {
  return {{"type", "zonotope"}, {"G", to_json(z.G)}, {"c", to_json(z.c)}};
}

inline json to_json(const ConstrainedZonotope& z) {
  return {{"type", "czonotope"},
          {"G", to_json(z.G)},
          {"c", to_json(z.c)},
          {"A", to_json(z.A)},
          {"b", to_json(z.b)}};
}

inline json to_json(const ZonotopeBundle& b) {
  json members = json::array();
  for (const auto& m : b.members) members.push_back(to_json(m));
  return {{"type", "bundle"}, {"members", std::move(members)}};
}

inline json to_json(const SetEnclosure& s) {
  json members = json::array();
  for (const auto& m : s.members) members.push_back(to_json(m));
  return {{"type", "enclosure"}, {"members", std::move(members)}};
}

inline ConstrainedZonotope cz_from_json(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "zonotope")
    return ConstrainedZonotope::from_zonotope(
        Zonotope{matrix_from_json(j.at("G")), vector_from_json(j.at("c"))});
  if (type != "czonotope") throw ParseError("expected a (c)zonotope, got " + type);
  Eigen::MatrixXd G = matrix_from_json(j.at("G"));
  Eigen::MatrixXd A = matrix_from_json(j.at("A"));
  if (A.rows() == 0) A.resize(0, G.cols());
  return ConstrainedZonotope::make(std::move(G), vector_from_json(j.at("c")),
                                   std::move(A), vector_from_json(j.at("b")));
}

inline SetEnclosure enclosure_from_json(const json& j) {
  if (j.value("type", "") != "enclosure") throw ParseError("expected an enclosure");
  SetEnclosure s;
  for (const auto& m : j.at("members")) s.members.push_back(cz_from_json(m));
  return s;
}

/// Shortest round-trip decimal representation.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

inline void write_polygon_csv(const std::string& path,
                              const std::vector<Eigen::Vector2d>& polygon) {
  std::string body;
  for (const auto& v : polygon)
    body += format_double(v[0]) + "," + format_double(v[1]) + "\n";
  write_text_file(path, body);
}

}  // namespace zonest

#endif  // ZONEST_IO_HPP_
