#pragma once

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oddramsey/graph.hpp"

namespace oddramsey {

// .occ text format:
//   n m r
//   u v c        (m lines, 0 <= u < v < n, 1 <= c <= r)
// A JSON object {"n":..,"r":..,"edges":[[u,v,c],...]} is accepted in its place.

namespace detail {

inline ColouredGraph graph_from_parts(int n, int r, std::vector<Edge> edges) {
  const std::size_t full = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const bool complete = edges.size() == full;
  return ColouredGraph(n, r, std::move(edges), complete);
}

inline ColouredGraph read_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON colouring: ") + e.what());
  }
  try {
    int n = doc.at("n").get<int>();
    int r = doc.at("r").get<int>();
    std::vector<Edge> edges;
    for (const auto& row : doc.at("edges")) {
      if (!row.is_array() || row.size() != 3) throw FormatError("each JSON edge must be [u, v, c]");
      Edge e{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()};
      if (e.u > e.v) std::swap(e.u, e.v);
      edges.push_back(e);
    }
    if (n < 0 || r < 1) throw FormatError("JSON colouring has invalid n or r");
    bool complete = doc.value("complete", false);
    if (doc.contains("complete")) return ColouredGraph(n, r, std::move(edges), complete);
    return graph_from_parts(n, r, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("JSON colouring missing fields: ") + e.what());
  }
}

}  // namespace detail

inline ColouredGraph read_occ(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return detail::read_json(text);

  std::istringstream body(text);
  long long n, m, r;
  if (!(body >> n >> m >> r)) throw FormatError("missing header line 'n m r'");
  if (n < 0 || m < 0 || r < 1) throw FormatError("header values out of range");
  if (n > vertex_limit()) throw ParameterError("vertex count exceeds the vertex limit");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v, c;
    if (!(body >> u >> v >> c))
      throw FormatError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    Edge e{static_cast<int>(u), static_cast<int>(v), static_cast<int>(c)};
    if (e.u > e.v) std::swap(e.u, e.v);
    edges.push_back(e);
  }
  std::string extra;
  if (body >> extra) throw FormatError("trailing content after " + std::to_string(m) + " edges");
  return detail::graph_from_parts(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

inline ColouredGraph parse_occ(const std::string& text) {
  std::istringstream in(text);
  return read_occ(in);
}

/// Canonical .occ output: edges sorted by (u, v) with u < v, LF endings.
inline void write_occ(std::ostream& out, const ColouredGraph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (Colour c = g.colour(u, v)) edges.push_back({u, v, c});
  out << g.n() << ' ' << edges.size() << ' ' << g.r() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << e.c << '\n';
}

inline std::string to_occ(const ColouredGraph& g) {
  std::ostringstream out;
  write_occ(out, g);
  return out.str();
}

inline nlohmann::json to_json(const ColouredGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (Colour c = g.colour(u, v)) edges.push_back({u, v, c});
  return {{"n", g.n()}, {"r", g.r()}, {"edges", std::move(edges)}};
}

}  // namespace oddramsey
