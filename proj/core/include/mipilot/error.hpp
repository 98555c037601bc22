#pragma once

#include <stdexcept>
#include <string>

namespace mipilot {

// Failure taxonomy shared across the library. Every error surfaced to a
// caller carries one of these codes plus a human-readable message, so the
// CLI can report actionable context and tests can match on the code.
enum class ErrorCode {
  ZeroSignal,
  EmptyClass,
  BandOutOfRange,
  IndexOutOfRange,
  WindowTooLong,
  RankDeficient,
  BadM,
  ChannelMismatch,
  DegenerateVariance,
  DimMismatch,
  SingleClass,
  NoConvergence,
  DegenerateScatter,
  UnknownClass,
  InvalidSpec,
  ParseError,
  ModelMismatch,
  UnmappedClass,
  BadSync,
  BadChecksum,
  BadLength,
  UnsupportedCommand,
  IoError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::BandOutOfRange: return "BandOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::ChannelMismatch: return "ChannelMismatch";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateScatter: return "DegenerateScatter";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::UnmappedClass: return "UnmappedClass";
    case ErrorCode::BadSync: return "BadSync";
    case ErrorCode::BadChecksum: return "BadChecksum";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::UnsupportedCommand: return "UnsupportedCommand";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mipilot
