#include "vcc/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcc/error.hpp"

namespace vcc {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

template <typename T>
void parse_pair(const std::string& line, std::size_t line_no, T& a, T& b) {
  std::istringstream fields(line);
  std::string extra;
  if (!(fields >> a >> b) || (fields >> extra)) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two integers");
  }
}

}  // namespace

DiGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw Error(Errc::ParseError, "missing header line `n m`");
  }
  long long n = 0;
  long long m = 0;
  parse_pair(line, line_no, n, m);
  if (n < 0 || m < 0) throw Error(Errc::ParseError, "negative n or m in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw Error(Errc::ParseError,
                  "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, line_no, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange, "line " + std::to_string(line_no) + ": edge (" +
                                              std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return DiGraph::from_edge_list(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  out << n << ' ' << sorted.size() << '\n';
  for (const auto& [u, v] : sorted) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const DiGraph& g) {
  write_edge_list(out, g.vertex_count(), g.edges());
}

}  // namespace vcc
