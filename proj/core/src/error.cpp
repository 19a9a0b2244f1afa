#include "causal/error.hpp"

namespace causal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::BadMatrix: return "BadMatrix";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::InvalidEvent: return "InvalidEvent";
    case ErrorCode::NeedProbes: return "NeedProbes";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::BadCode: return "BadCode";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::WrongSignature: return "WrongSignature";
  }
  return "Error";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    std::optional<std::size_t> offset) {
  std::string out(to_string(code));
  if (offset) out += " at byte " + std::to_string(*offset);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(compose(code, message, offset)),
      code_(code),
      detail_(message),
      offset_(offset) {}

Error Error::at(std::size_t offset) const {
  if (offset_) return *this;
  return Error(code_, detail_, offset);
}

}  // namespace causal
