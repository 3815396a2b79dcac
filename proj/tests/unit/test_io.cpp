#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "symspec/io.hpp"

using namespace symspec;

TEST_CASE("set text round trip") {
  const auto s = parse_set_text("n=4 convention=An\n# comment\n\n2 3 1 4\n(1 2)(3 4)\n1 2 3 4\n");
  CHECK(s.degree() == 4);
  CHECK(s.convention() == DensityConvention::over_An);
  CHECK(s.size() == 3);
  CHECK(s.contains(parse_permutation("2 1 4 3")));
  const auto text = format_set(s);
  CHECK(text == "n=4 convention=An\n1 2 3 4\n2 1 4 3\n2 3 1 4\n");
  CHECK(parse_set_text(text) == s);
  // Convention defaults to S_n.
  CHECK(parse_set_text("n=3\n2 1 3\n").convention() == DensityConvention::over_Sn);
}

TEST_CASE("malformed set files") {
  CHECK_THROWS_AS(parse_set_text(""), Error);
  CHECK_THROWS_AS(parse_set_text("2 1 3\n"), Error);
  CHECK_THROWS_AS(parse_set_text("n=3 convention=Bn\n"), Error);
  CHECK_THROWS_AS(parse_set_text("n=3 colour=red\n"), Error);
  CHECK_THROWS_AS(parse_set_text("n=11\n"), Error);
  CHECK_THROWS_WITH_AS(parse_set_text("n=3\n1 2 3\n1 1 2\n"), doctest::Contains("line 3"), Error);
  CHECK_THROWS_AS(parse_set_text("n=3\n1 2 3 4\n"), Error);
}

TEST_CASE("function text") {
  const auto f = parse_function_text("n=3\n0 1.5\n(1 2) -2\n3 1 2 0.25\n");
  CHECK(f.degree() == 3);
  CHECK(f[0] == 1.5);
  CHECK(f.at(parse_permutation("2 1 3")) == -2.0);
  CHECK(f.at(parse_permutation("3 1 2")) == 0.25);
  CHECK(f[rank(parse_permutation("1 3 2"))] == 0.0);
  const auto back = parse_function_text(format_function(f));
  CHECK(max_abs_diff(back, f) == 0.0);
  // Round-trip precision.
  GroupFunction g(4);
  g[5] = 0.1 + 0.2;
  g[23] = -1e-300;
  CHECK(max_abs_diff(parse_function_text(format_function(g)), g) == 0.0);

  CHECK(parse_function_text("n=1\n0 2\n")[0] == 2.0);
  CHECK(parse_function_text("n=1\n1 3\n")[0] == 3.0);
  CHECK_THROWS_AS(parse_function_text("n=3\n0 1\n0 2\n"), Error);
  CHECK_THROWS_AS(parse_function_text("n=3\n6 1\n"), Error);
  CHECK_THROWS_AS(parse_function_text("n=3\n0 x\n"), Error);
  CHECK_THROWS_AS(parse_function_text("n=3\n1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_function_text("n=3 convention=An\n"), Error);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "symspec_io_test";
  std::filesystem::create_directories(dir);
  const auto set_path = (dir / "a.perms").string();
  const auto s = SetFamily::full(4, Parity::even);
  write_set_file(set_path, s);
  CHECK(read_set_file(set_path) == s);

  const auto fn_path = (dir / "f.txt").string();
  const auto f = GroupFunction::dictator(4, 1, 2);
  write_function_file(fn_path, f);
  CHECK(max_abs_diff(read_function_file(fn_path), f) == 0.0);

  const auto m_path = (dir / "m.json").string();
  CoeffMatrix m(3);
  m(0, 1) = 0.5;
  m(2, 2) = -1.0 / 3;
  write_matrix_file(m_path, m);
  CHECK((read_matrix_file(m_path).a - m.a).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_WITH_AS(read_set_file((dir / "missing").string()), doctest::Contains("cannot open"), Error);
  write_text_file(m_path, "{not json");
  CHECK_THROWS_AS(read_matrix_file(m_path), Error);
  std::filesystem::remove_all(dir);
}
