#pragma once
#include <stdexcept>
#include <string>

namespace rma {

enum class Errc {
  invalid_argument,
  shape_mismatch,
  io,
  bad_config,
  missing_artifact,
  diverged,
  runtime,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace rma
