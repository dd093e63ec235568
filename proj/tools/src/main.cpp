#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "plh/error.hpp"

namespace {

void add_group(CLI::App* app, plh::cli::GroupSource& src) {
  auto* file = app->add_option("--group", src.file, "group file");
  app->add_option("--builtin", src.builtin, "builtin group: ring5, chain<n>, kkl")->excludes(file);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace plh::cli;
  CLI::App app{"Exact PL homeomorphism groups: construction and certificate checking"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* cmd_build_app = app.add_subcommand("build", "write a standard group file");
  cmd_build_app->add_option("kind", build.kind, "chain | ring | kkl")->required()->check(
      CLI::IsMember({"chain", "ring", "kkl"}));
  cmd_build_app->add_option("--n", build.n, "number of chain generators");
  cmd_build_app->add_flag("--standard", build.standard, "the standard five-generator ring");
  cmd_build_app->add_option("--out", build.out, "output file (default stdout)");
  cmd_build_app->add_option("--witness-out", build.witness_out, "also write the standard cv witness file");

  VerifyOptions verify;
  auto* verify_app = app.add_subcommand("verify", "run a verification suite");
  add_group(verify_app, verify.group);
  verify_app->add_option("--suite", verify.suite, "chain | ring | cv | all")->check(
      CLI::IsMember({"chain", "ring", "cv", "all"}));
  verify_app->add_option("--witness", verify.witness, "witness file for the cv suite");
  verify_app->add_option("--format", verify.format, "text | structured")->check(
      CLI::IsMember({"text", "structured"}));
  verify_app->add_option("--kmax", verify.k_max, "depth bound for distinguished pairs");

  auto* search_app = app.add_subcommand("search", "bounded searches");
  search_app->require_subcommand(1);
  HigmanOptions higman;
  auto* higman_app = search_app->add_subcommand("higman", "search a displacement certificate");
  add_group(higman_app, higman.group);
  higman_app->add_option("--s1", higman.s1)->required();
  higman_app->add_option("--s2", higman.s2)->required();
  higman_app->add_option("--g", higman.g, "element g as a word")->required();
  higman_app->add_option("--max-len", higman.max_len, "longest u to try")->check(CLI::NonNegativeNumber);
  MoveOptions move;
  auto* move_app = search_app->add_subcommand("move", "find w with w(K) inside J");
  add_group(move_app, move.group);
  move_app->add_option("--k", move.k, "closed pieces, e.g. \"[0,1] [2,3]\"")->required();
  move_app->add_option("--j", move.j, "open target (lo,hi)")->required();
  move_app->add_option("--max-len", move.max_len, "word length budget")->check(CLI::NonNegativeNumber);
  move_app->add_flag("--commutator", move.commutator, "only products of commutators");

  CheckHigmanOptions check_higman;
  auto* check_app = app.add_subcommand("check-higman", "verify a serialized displacement certificate");
  add_group(check_app, check_higman.group);
  check_app->add_option("--cert", check_higman.cert, "\"higman ONE|TWO ...\"")->required();

  OrbitOptions orbit;
  auto* orbit_app = app.add_subcommand("orbit", "orbit coverage of a window, as CSV");
  add_group(orbit_app, orbit.group);
  orbit_app->add_option("--gen", orbit.gens, "generator (repeatable; default all)");
  orbit_app->add_option("--seed", orbit.seed)->required();
  orbit_app->add_option("--window", orbit.window, "[lo,hi]")->required();
  orbit_app->add_option("--eps", orbit.eps, "grid spacing")->required();
  orbit_app->add_option("--depth", orbit.depth)->required()->check(CLI::NonNegativeNumber);
  orbit_app->add_option("--out", orbit.out);

  PlotOptions plot;
  auto* plot_app = app.add_subcommand("plotdata", "support diagram records");
  add_group(plot_app, plot.group);
  plot_app->add_flag("--rprime", plot.rprime, "include rp1..rp5 for a five-generator ring");
  plot_app->add_option("--out", plot.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_build_app) return cmd_build(build, std::cout);
    if (*verify_app) return cmd_verify(verify, std::cout);
    if (*higman_app) return cmd_search_higman(higman, std::cout);
    if (*move_app) return cmd_search_move(move, std::cout);
    if (*check_app) return cmd_check_higman(check_higman, std::cout);
    if (*orbit_app) return cmd_orbit(orbit, std::cout);
    if (*plot_app) return cmd_plotdata(plot, std::cout);
  } catch (const plh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
