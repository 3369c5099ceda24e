#pragma once

#include <stdexcept>
#include <string>

namespace dfam {

enum class ErrorKind {
  InvalidParameter,
  Collision,
  Precondition,
  Parse,
  Range,
  Io,
  CapExceeded,
  Verification,
  Worker,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a block's difference is already present in a DiffTracker.
class CollisionError : public Error {
 public:
  explicit CollisionError(int difference)
      : Error(ErrorKind::Collision, "difference " + std::to_string(difference) + " already used"),
        difference_(difference) {}
  int difference() const noexcept { return difference_; }

 private:
  int difference_;
};

}  // namespace dfam
