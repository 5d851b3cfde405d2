#include "petrikit/error.hpp"

#include <utility>

namespace petrikit {

std::string_view codeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::NonBipartiteArc: return "NonBipartiteArc";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NegativeTokens: return "NegativeTokens";
    case ErrorCode::MarkingSizeMismatch: return "MarkingSizeMismatch";
    case ErrorCode::NotEnabled: return "NotEnabled";
    case ErrorCode::UnknownTransition: return "UnknownTransition";
    case ErrorCode::UnknownPlace: return "UnknownPlace";
    case ErrorCode::StateLimitExceeded: return "StateLimitExceeded";
    case ErrorCode::TruncatedGraph: return "TruncatedGraph";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownDirective: return "UnknownDirective";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::XmlError: return "XmlError";
    case ErrorCode::UnsupportedNetType: return "UnsupportedNetType";
    case ErrorCode::DanglingArcRef: return "DanglingArcRef";
    case ErrorCode::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, SourceLocation where) {
  std::string out;
  if (where.known()) {
    out += "line " + std::to_string(where.line);
    if (where.column != 0) out += ", column " + std::to_string(where.column);
    out += ": ";
  }
  out += codeName(code);
  out += ": ";
  out += message;
  return out;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, SourceLocation where)
    : std::runtime_error(decorate(code, message, where)),
      code_(code),
      where_(where),
      detail_(message) {}

NotEnabledError::NotEnabledError(std::string transition, std::vector<std::string> deficient,
                                 std::optional<std::size_t> position)
    : Error(ErrorCode::NotEnabled,
            "transition " + transition + " is not enabled; insufficient tokens on " +
                joined(deficient) +
                (position ? " (sequence position " + std::to_string(*position) + ")" : "")),
      transition_(std::move(transition)),
      deficient_(std::move(deficient)),
      position_(position) {}

StateLimitError::StateLimitError(std::size_t explored, std::size_t limit)
    : Error(ErrorCode::StateLimitExceeded,
            "state limit of " + std::to_string(limit) + " exceeded after " +
                std::to_string(explored) + " states"),
      explored_(explored),
      limit_(limit) {}

}  // namespace petrikit
