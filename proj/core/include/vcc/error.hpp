#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcc {

/// Domain error cases raised by the library. The CLI maps these to exit status 1.
enum class Errc {
  VertexOutOfRange,
  NotAFlowgraph,
  NotStronglyConnected,
  NotTwoVertexConnected,
  NoCutExists,
  InvalidK,
  UnknownVariant,
  TooLarge,
  InvalidSpec,
  MismatchedOutputs,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vcc
