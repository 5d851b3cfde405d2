#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace petrikit {

enum class ErrorCode {
  // net construction
  DuplicateId,
  DuplicateArc,
  UnknownEndpoint,
  NonBipartiteArc,
  ZeroWeight,
  NegativeTokens,
  // token game
  MarkingSizeMismatch,
  NotEnabled,
  UnknownTransition,
  UnknownPlace,
  // state space
  StateLimitExceeded,
  TruncatedGraph,
  // text formats
  SyntaxError,
  UnknownDirective,
  MalformedNumber,
  XmlError,
  UnsupportedNetType,
  DanglingArcRef,
  // io
  FileNotFound,
};

std::string_view codeName(ErrorCode code);

/// 1-based line/column; line 0 means "no position".
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;

  bool known() const { return line != 0; }
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// Base of every error the library throws. Carries a machine-readable code
/// and, for anything that came out of a text file, where it happened.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, SourceLocation where = {});

  ErrorCode code() const noexcept { return code_; }
  const SourceLocation& location() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  SourceLocation where_;
  std::string detail_;
};

class NotEnabledError : public Error {
 public:
  NotEnabledError(std::string transition, std::vector<std::string> deficient,
                  std::optional<std::size_t> position = std::nullopt);

  const std::string& transition() const noexcept { return transition_; }
  /// Input places holding fewer tokens than the arc weight, in declaration order.
  const std::vector<std::string>& deficientPlaces() const noexcept { return deficient_; }
  /// Index in a firing sequence, when the failure happened inside fireSequence.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::string transition_;
  std::vector<std::string> deficient_;
  std::optional<std::size_t> position_;
};

class StateLimitError : public Error {
 public:
  StateLimitError(std::size_t explored, std::size_t limit);

  std::size_t explored() const noexcept { return explored_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t explored_;
  std::size_t limit_;
};

}  // namespace petrikit
