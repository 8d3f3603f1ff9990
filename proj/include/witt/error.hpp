#pragma once

#include <stdexcept>
#include <string>

namespace witt {

enum class ErrorCode {
  Usage = 1,        // caller violated a documented precondition
  Domain = 2,       // mathematically undefined request (e.g. inverse of zero)
  ExtendField = 3,  // an eigenvalue lies outside the configured field
  Sizing = 4,       // a configured size cap would be exceeded
  Internal = 5,     // an internal consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::Usage, what);
}

}  // namespace witt
