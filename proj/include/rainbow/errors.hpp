#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

enum class ErrorKind {
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kUnknownEdge,
  kPartialColoring,
  kInvalidColor,
  kDisconnected,
  kNotBipartite,
  kParse,
  kPrecondition,
};

// Raised for malformed or out-of-scope input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  InputError(ErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// The search hit its node cap before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
