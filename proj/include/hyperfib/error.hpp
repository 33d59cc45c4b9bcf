#ifndef HYPERFIB_ERROR_HPP
#define HYPERFIB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperfib {

enum class ErrorCode {
  EmptyInput,
  MalformedLine,
  EmptyHyperedge,
  InvalidCounts,
  UnbalancedPartition,
  Disconnected,
  NonFiniteState,
  IoFailure,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EmptyHyperedge: return "EmptyHyperedge";
    case ErrorCode::InvalidCounts: return "InvalidCounts";
    case ErrorCode::UnbalancedPartition: return "UnbalancedPartition";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperfib

#endif
