#pragma once

#include <stdexcept>
#include <string>

namespace eulerian {

/// Bad caller input: out-of-range ranks, wrong word class, violated
/// preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or enumeration would exceed its configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// glue(): two parts disagree on the size of a shared level.
class GlueMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// glue(): two parts induce different order relations between shared levels.
class GlueInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ab-index is not a polynomial in c = a+b and d = ab+ba (some L_Q on a
/// non-even set is nonzero).
class NotCdExpressible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity the code relies on failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A well-formed expression whose arguments are out of range.
class RangeError : public InvalidArgument {
 public:
  RangeError(std::size_t offset, const std::string& message)
      : InvalidArgument("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace eulerian
