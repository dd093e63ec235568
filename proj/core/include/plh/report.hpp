#pragma once

#include <string>
#include <vector>

namespace plh {

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s);

/// One verified (or refuted) condition. The id is one of the frozen check
/// names, optionally followed by its indices, e.g. "RP_SUPP(3)".
struct Check {
  std::string id;
  Status status = Status::Skip;
  std::string witness;

  bool passed() const { return status == Status::Pass; }
};

inline Check make_check(std::string id, bool ok, std::string witness) {
  return {std::move(id), ok ? Status::Pass : Status::Fail, std::move(witness)};
}

/// Ordered list of checks with unique ids.
class CheckReport {
 public:
  /// Throws Error(InvalidArgument) on a duplicate id.
  void add(Check c);
  void append(const std::vector<Check>& cs);

  const std::vector<Check>& checks() const { return checks_; }
  bool any_failed() const;
  bool any_skipped() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_status() const { return any_failed() ? 1 : 0; }
  /// "CHECK <id> <PASS|FAIL|SKIP> <witness>" per line.
  std::string text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace plh
