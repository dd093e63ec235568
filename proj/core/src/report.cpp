#include "plh/report.hpp"

#include <algorithm>

#include "plh/error.hpp"

namespace plh {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "SKIP";
}

void CheckReport::add(Check c) {
  if (std::any_of(checks_.begin(), checks_.end(), [&](const Check& o) { return o.id == c.id; }))
    throw Error(ErrorCode::InvalidArgument, "duplicate check id " + c.id);
  checks_.push_back(std::move(c));
}

void CheckReport::append(const std::vector<Check>& cs) {
  for (const auto& c : cs) add(c);
}

bool CheckReport::any_failed() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; });
}

bool CheckReport::any_skipped() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Skip; });
}

std::string CheckReport::text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += "CHECK " + c.id + " " + std::string(to_string(c.status));
    if (!c.witness.empty()) out += " " + c.witness;
    out += '\n';
  }
  return out;
}

}  // namespace plh
