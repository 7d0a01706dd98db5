#ifndef POLYCLIQUE_ERROR_HPP
#define POLYCLIQUE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyclique {

enum class ErrorKind {
  SelfLoop,
  OutOfRange,
  DuplicateEdge,
  MissingProblemLine,
  EdgeCountMismatch,
  MalformedLine,
  InvalidProbability,
  InvalidK,
  InvalidArcIndex,
  TooLarge,
  NegativeBudget,
  KOutOfRange,
  TraceGraphMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingProblemLine: return "MissingProblemLine";
    case ErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InvalidArcIndex: return "InvalidArcIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NegativeBudget: return "NegativeBudget";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::TraceGraphMismatch: return "TraceGraphMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Errors that stem from malformed graph input rather than bad arguments.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::SelfLoop:
      case ErrorKind::OutOfRange:
      case ErrorKind::DuplicateEdge:
      case ErrorKind::MissingProblemLine:
      case ErrorKind::EdgeCountMismatch:
      case ErrorKind::MalformedLine:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace polyclique

#endif  // POLYCLIQUE_ERROR_HPP
