#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace rsrnet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

inline void log_warn(const std::string& msg) {
  std::fprintf(stderr, "[rsrnet] warning: %s\n", msg.c_str());
}

}  // namespace rsrnet
