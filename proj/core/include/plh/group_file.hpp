#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plh/chain.hpp"
#include "plh/cvgraph.hpp"
#include "plh/ring.hpp"
#include "plh/word.hpp"

namespace plh {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   map <name> line             map <name> circle L=<rat>
//   bp <x>:<y>                  (one per breakpoint, x increasing)
//   tails <left> <right>        (line maps)
//   rot <c>                     (circle maps without breakpoints)
//   end
//   define <name> = <word>      (bound to the evaluated word)
//   chain <name>...             ring <name>...

enum class SystemKind { None, Chain, Ring };

struct GroupFile {
  std::vector<std::string> maps;  // names of explicit maps, file order
  std::vector<std::pair<std::string, Word>> defines;
  SystemKind system = SystemKind::None;
  std::vector<std::string> system_names;
  GenAssignment env;  // explicit maps and defines

  /// Generators to search over: the declared system, else the explicit maps.
  std::vector<std::string> generators() const;
};

/// Throws Error(ParseError) with the line number.
GroupFile parse_group(std::string_view text);
GroupFile load_group(const std::filesystem::path& path);
std::string write_group(const GroupFile& group);

std::string write_map(const std::string& name, const PLMap& map);

GroupFile group_from_chain(const ChainSystem& chain);
GroupFile group_from_ring(const RingSystem& ring);
GroupFile group_from_kkl();

/// "ring5", "chain<n>" or "kkl". Throws InvalidArgument.
GroupFile builtin_group(const std::string& name);

/// Maps of the declared system, validated. Throws InvalidArgument when the
/// file declares no system of that kind.
std::variant<ChainSystem, Violation> chain_of(const GroupFile& group);
std::vector<CircleMap> ring_maps_of(const GroupFile& group);

// Witness files:
//   edge <si> <sj> <word>
//   class <name>: <members...> via <words...>
//   dense <name>: <members...>
WitnessSet parse_witnesses(std::string_view text);
WitnessSet load_witnesses(const std::filesystem::path& path);
std::string write_witnesses(const WitnessSet& w);

std::string read_file(const std::filesystem::path& path);

}  // namespace plh
