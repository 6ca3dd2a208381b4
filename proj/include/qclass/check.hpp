#pragma once

// Outcome of one verification step, shared by the modules and the report layer.

#include <string>

namespace qclass {

enum class Status { Pass, Fail, Skipped };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

struct Outcome {
  std::string id;
  std::string anchor;  // the claim being checked, in words
  Status status = Status::Fail;
  std::string witness;
};

inline Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace qclass
