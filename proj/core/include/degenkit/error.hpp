#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degenkit {

enum class Errc {
  // malformed or unreadable input
  Parse,
  Io,
  InvalidCatalog,
  // domain errors
  UnknownLabel,
  MalformedFVector,
  EmptyStratum,
  InvalidModel,
  InvalidCenter,
  IdCollision,
  DimensionMismatch,
  InvalidPeriod,
  NotKulikov,
  BadChain,
  NotAComplex,
  ShapeMismatch,
  BadOrbit,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by unreadable or syntactically malformed input
/// (as opposed to well-formed input that violates a mathematical condition).
constexpr bool is_input_error(Errc code) noexcept {
  return code == Errc::Parse || code == Errc::Io || code == Errc::InvalidCatalog;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace degenkit
