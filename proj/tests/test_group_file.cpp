#include <doctest.h>

#include "convert.hpp"
#include "plh/error.hpp"
#include "plh/group_file.hpp"

using namespace plh;
using testing_support::R;

TEST_CASE("group files round-trip exactly") {
  for (const char* name : {"ring5", "chain4", "kkl"}) {
    const GroupFile g = builtin_group(name);
    const std::string text = write_group(g);
    const GroupFile back = parse_group(text);
    CHECK(write_group(back) == text);
    for (const auto& m : g.maps) CHECK(equals(g.env.at(m), back.env.at(m)));
    CHECK(back.system == g.system);
  }
}

TEST_CASE("map blocks") {
  const GroupFile g = parse_group(
      "# comment\n"
      "map f line\n"
      "bp 0:0\n"
      "bp 1/2:1\n"
      "bp 1:3/2\n"
      "bp 2:2\n"
      "tails 0 0\n"
      "end\n"
      "map t line\n"
      "tails 1 1\n"
      "end\n");
  CHECK(std::get<LineMap>(g.env.at("f"))(R(1, 4)) == R(1, 2));
  CHECK(std::get<LineMap>(g.env.at("t"))(R(0)) == R(1));
  const GroupFile c = parse_group("map c circle L=5\nrot 2\nend\n");
  CHECK(evaluate(c.env.at("c"), R(4)) == R(1));
  CHECK(write_map("c", c.env.at("c")) == "map c circle L=5\nrot 2\nend\n");
  CHECK_THROWS_AS(parse_group("map f line\nend\nmap c circle L=5\nend\n"), Error);
}

TEST_CASE("defines and system declarations") {
  const GroupFile base = builtin_group("ring5");
  const GroupFile g = parse_group(write_group(base) + "define c1 = r3^2.r2^2.r1^2.r5\n");
  CHECK(g.system == SystemKind::Ring);
  CHECK(g.generators() == std::vector<std::string>{"r1", "r2", "r3", "r4", "r5"});
  CHECK(evaluate(g.env.at("c1"), R(3)) == R(37, 8));
  CHECK(write_group(parse_group(write_group(g))) == write_group(g));
}

TEST_CASE("parse errors carry line numbers") {
  auto code_of = [](const std::string& text) {
    try {
      parse_group(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(code_of("map f line\nbp 0:0\n").find("no 'end'") != std::string::npos);
  CHECK(code_of("map f line\nbp 0 0\nend\n").find("line 2") != std::string::npos);
  CHECK(code_of("map f line\nbp 0:1\nbp 1:0\nend\n").find("line 1") != std::string::npos);
  CHECK(code_of("frob\n").find("unknown directive") != std::string::npos);
  CHECK(code_of("ring a b c\n").find("unbound") != std::string::npos);
  CHECK(code_of("map f circle 5\nend\n").find("line 1") != std::string::npos);
  CHECK(code_of("define x = y\n").find("line 1") != std::string::npos);
}

TEST_CASE("witness files round-trip") {
  const StandardCV s = standard_cv_witnesses(make_standard_ring5());
  const std::string text = write_witnesses(s.witnesses);
  const WitnessSet back = parse_witnesses(text);
  CHECK(write_witnesses(back) == text);
  CHECK(back.edges.size() == s.witnesses.edges.size());
  CHECK(back.classes.size() == 5);
  CHECK(back.classes[0].via[0] == s.witnesses.classes[0].via[0]);
  CHECK_THROWS_AS(parse_witnesses("edge a b\n"), Error);
  CHECK_THROWS_AS(parse_witnesses("class C1 r1 rp1\n"), Error);
}

TEST_CASE("builtins") {
  CHECK(builtin_group("chain3").maps.size() == 3);
  CHECK_THROWS_AS(builtin_group("chain1"), Error);
  CHECK_THROWS_AS(builtin_group("nope"), Error);
}
