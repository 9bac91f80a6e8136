#include <doctest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "vcc/error.hpp"
#include "vcc/io.hpp"

using namespace vcc;
using namespace fixtures;

TEST_CASE("edge-list round trip") {
  std::stringstream ss;
  write_edge_list(ss, fig1());
  const std::string text = ss.str();
  CHECK(text.rfind("8 18\n0 3\n0 4\n", 0) == 0);
  CHECK(read_edge_list(ss) == fig1());
}

TEST_CASE("reader skips comments and blank lines") {
  std::istringstream in("# header\n\n3 3\n0 1\n# mid\n1 2\n2 0\n");
  CHECK(read_edge_list(in) == c3());
}

TEST_CASE("writer sorts edges") {
  std::ostringstream out;
  const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 2}};
  write_edge_list(out, 3, edges);
  CHECK(out.str() == "3 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("malformed input") {
  const auto code_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidSpec;  // sentinel: no throw
  };
  CHECK(code_of("") == Errc::ParseError);
  CHECK(code_of("3 2\n0 1\n") == Errc::ParseError);
  CHECK(code_of("3 1\n0 x\n") == Errc::ParseError);
  CHECK(code_of("three 1\n") == Errc::ParseError);
  CHECK(code_of("3 1\n0 5\n") == Errc::VertexOutOfRange);
}
