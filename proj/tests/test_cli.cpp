#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "run.hpp"

using testing_support::run;

namespace {

const std::string kCli = PLH_CLI_PATH;

std::filesystem::path scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "plh_cli_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string cli(const std::string& args) { return kCli + " " + args + " 2>/dev/null"; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("build and verify the standard ring") {
  const auto grp = (scratch() / "ring5.grp").string();
  const auto wit = (scratch() / "ring5.wit").string();
  REQUIRE(run(cli("build ring --standard --out " + grp + " --witness-out " + wit)).exit_code == 0);
  const auto all = run(cli("verify --group " + grp + " --suite all --witness " + wit));
  CHECK(all.exit_code == 0);
  CHECK(count(all.out, " FAIL ") == 0);
  CHECK(count(all.out, " SKIP ") == 0);
  CHECK(all.out.find("VERDICT HYPOTHESES-VERIFIED") != std::string::npos);

  const auto ring = run(cli("verify --group " + grp + " --suite ring"));
  CHECK(ring.exit_code == 0);
  CHECK(ring.out.find("CHECK RP_SUPP(1) PASS (9/2,37/8)") != std::string::npos);

  // idempotent build, byte-identical reports after a round-trip
  const auto again = (scratch() / "ring5b.grp").string();
  REQUIRE(run(cli("build ring --standard --out " + again)).exit_code == 0);
  CHECK(run("cmp -s " + grp + " " + again).exit_code == 0);
  CHECK(run(cli("verify --group " + again + " --suite all --witness " + wit)).out == all.out);
  CHECK(run(cli("verify --builtin ring5 --suite all --witness " + wit)).out == all.out);
}

TEST_CASE("verify failure and skip paths") {
  const auto grp = (scratch() / "broken.grp").string();
  std::string text = run(cli("build ring --standard")).out;
  // replace r3 by the identity
  const auto start = text.find("map r3 circle L=5");
  const auto end = text.find("end\n", start) + 4;
  text.replace(start, end - start, "map r3 circle L=5\nrot 0\nend\n");
  std::ofstream(grp) << text;
  const auto broken = run(cli("verify --group " + grp + " --suite ring"));
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("CHECK R2(2,3) FAIL") != std::string::npos);

  const auto cv = run(cli("verify --builtin ring5 --suite cv"));
  CHECK(cv.exit_code == 1);
  CHECK(count(cv.out, " SKIP ") > 0);

  const auto bad = (scratch() / "bad.grp").string();
  std::ofstream(bad) << "map f line\nbp 0:1\n";
  CHECK(run(cli("verify --group " + bad + " --suite all")).exit_code == 2);
  CHECK(run(cli("verify --group /nonexistent/file --suite all")).exit_code == 2);
  CHECK(run(cli("verify --suite bogus")).exit_code == 2);
}

TEST_CASE("structured output carries the same checks") {
  const auto text = run(cli("verify --builtin ring5 --suite ring"));
  const auto structured = run(cli("verify --builtin ring5 --suite ring --format structured"));
  REQUIRE(structured.exit_code == 0);
  const auto doc = nlohmann::json::parse(structured.out);
  CHECK(doc["exit"] == 0);
  CHECK(doc["checks"].size() == count(text.out, "CHECK "));
  CHECK(doc["checks"][0]["id"] == "R1(1,3)");
}

TEST_CASE("chain suite") {
  const auto grp = (scratch() / "chain4.grp").string();
  REQUIRE(run(cli("build chain --n 4 --out " + grp)).exit_code == 0);
  const auto r = run(cli("verify --group " + grp + " --suite chain"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("CHECK BOUNDARY_II(2) PASS") != std::string::npos);
  CHECK(count(r.out, "bp ") == 0);
  CHECK(run(cli("build chain --n 4")).out.find("map f4 line") != std::string::npos);
  CHECK(run(cli("build chain --n 1")).exit_code == 2);
  CHECK(run(cli("verify --group " + grp + " --suite ring")).exit_code == 2);
}

TEST_CASE("search") {
  const auto h = run(cli("search higman --s1 rp1 --s2 rp1 --g r4 --max-len 0"));
  CHECK(h.exit_code == 0);
  CHECK(h.out == "higman ONE rp1 rp1 r4 1\n");
  const auto m = run(cli("search move --k \"[5/2,11/4]\" --j \"(3,4)\" --max-len 4"));
  CHECK(m.exit_code == 0);
  CHECK(m.out == "MOVE r2^2 [7/2,29/8]\n");
  const auto none = run(cli("search higman --s1 r1 --s2 r1 --g r3 --max-len 0"));
  CHECK(none.exit_code == 3);
  CHECK(none.out.rfind("NOTFOUND", 0) == 0);
  CHECK(run(cli("search higman --s1 zz --s2 r1 --g r3 --max-len 0")).exit_code == 2);
  CHECK(run(cli("check-higman --cert \"higman ONE r1 r1 r3 1\"")).exit_code == 1);
  CHECK(run(cli("check-higman --cert \"higman ONE rp1 rp1 r4 1\"")).exit_code == 0);
}

TEST_CASE("orbit and plotdata") {
  const auto o = run(cli("orbit --gen a --seed 0 --window [0,4] --eps 1 --depth 3"));
  CHECK(o.exit_code == 0);
  CHECK(o.out == "depth,points,coverageNum,coverageDen\n0,1,1,4\n1,2,2,4\n2,3,3,4\n3,4,4,4\n");
  const auto zero = run(cli("orbit --gen a --seed 0 --window [0,4] --eps 1 --depth 0"));
  CHECK(count(zero.out, "\n") == 2);
  CHECK(run(cli("orbit --builtin chain3 --seed 1 --window [0,9] --eps 1 --depth 2")).exit_code == 2);

  const auto p = run(cli("plotdata"));
  CHECK(count(p.out, "ARC ") == 5);
  const auto pr = run(cli("plotdata --rprime"));
  CHECK(count(pr.out, "ARC ") == 10);
  CHECK(pr.out.find("ARC rp1 9/2 37/8 mod 5") != std::string::npos);
  CHECK(run(cli("plotdata --builtin kkl")).out == "ARC a -inf +inf\nARC b 0 +inf\n");
}

TEST_CASE("thread count does not change output") {
  const std::string args = "search higman --s1 r1 --s2 r2 --g r4.r5 --max-len 2";
  const auto one = run("PLH_THREADS=1 " + cli(args));
  const auto many = run("PLH_THREADS=6 " + cli(args));
  CHECK(one.out == many.out);
  CHECK(one.exit_code == many.exit_code);
}
