#pragma once

#include <stdexcept>
#include <string>

namespace cdrkit {

/// Malformed or invalid permutation text / entry list.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}

  /// The offending token ("" when the whole input is at fault).
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A move was requested that the current state does not admit.
/// Kept distinct from validation errors so that callers counting steps
/// never mistake a refused move for a no-op.
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cdrkit
