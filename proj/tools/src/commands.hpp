#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace plh::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kNotFound = 3 };

struct GroupSource {
  std::string file;     // empty: use builtin
  std::string builtin;  // empty: command default
};

struct BuildOptions {
  std::string kind;  // chain | ring | kkl
  int n = 4;
  bool standard = false;
  std::string out;
  std::string witness_out;
};

struct VerifyOptions {
  GroupSource group;
  std::string suite = "all";
  std::string witness;
  std::string format = "text";
  int k_max = 3;
};

struct HigmanOptions {
  GroupSource group;
  std::string s1, s2, g;
  long max_len = 2;
};

struct CheckHigmanOptions {
  GroupSource group;
  std::string cert;
};

struct MoveOptions {
  GroupSource group;
  std::string k;  // one or more closed pieces, e.g. "[0,1] [2,3]"
  std::string j;
  long max_len = 4;
  bool commutator = false;
};

struct OrbitOptions {
  GroupSource group;
  std::vector<std::string> gens;
  std::string seed, window, eps;
  long depth = 0;
  std::string out;
};

struct PlotOptions {
  GroupSource group;
  bool rprime = false;
  std::string out;
};

int cmd_build(const BuildOptions& o, std::ostream& out);
int cmd_verify(const VerifyOptions& o, std::ostream& out);
int cmd_search_higman(const HigmanOptions& o, std::ostream& out);
int cmd_check_higman(const CheckHigmanOptions& o, std::ostream& out);
int cmd_search_move(const MoveOptions& o, std::ostream& out);
int cmd_orbit(const OrbitOptions& o, std::ostream& out);
int cmd_plotdata(const PlotOptions& o, std::ostream& out);

}  // namespace plh::cli
