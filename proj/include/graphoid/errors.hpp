#pragma once

#include <stdexcept>
#include <string>

namespace graphoid {

// All library errors carry a stable machine-readable code alongside the
// human-readable message.  Codes are lowercase snake_case tokens and are part
// of the public interface (the CLI surfaces them in JSON output).
class GraphoidError : public std::runtime_error {
public:
  GraphoidError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Raised when a computation would exceed the configured size budget.
class BudgetExceeded : public GraphoidError {
public:
  explicit BudgetExceeded(const std::string& message)
      : GraphoidError("budget_exceeded", message) {}
};

}  // namespace graphoid
