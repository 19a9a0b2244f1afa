#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace causal {

enum class ErrorCode {
  SyntaxError,
  TypeMismatch,
  BadMatrix,
  BadWeight,
  InvalidEvent,
  NeedProbes,
  NotFinite,
  NotAFunction,
  BadCode,
  BadParam,
  WrongSignature,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the engine. Parse-time failures carry the byte
// offset of the offending s-expression.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

  Error at(std::size_t offset) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> offset_;
};

}  // namespace causal
