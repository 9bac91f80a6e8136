#include "vcc/error.hpp"

namespace vcc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NotAFlowgraph: return "NotAFlowgraph";
    case Errc::NotStronglyConnected: return "NotStronglyConnected";
    case Errc::NotTwoVertexConnected: return "NotTwoVertexConnected";
    case Errc::NoCutExists: return "NoCutExists";
    case Errc::InvalidK: return "InvalidK";
    case Errc::UnknownVariant: return "UnknownVariant";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::MismatchedOutputs: return "MismatchedOutputs";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace vcc
