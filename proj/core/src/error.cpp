#include "degenkit/error.hpp"

namespace degenkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::Io: return "IoError";
    case Errc::InvalidCatalog: return "InvalidCatalog";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::MalformedFVector: return "MalformedFVector";
    case Errc::EmptyStratum: return "EmptyStratum";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::InvalidCenter: return "InvalidCenter";
    case Errc::IdCollision: return "IdCollision";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidPeriod: return "InvalidPeriod";
    case Errc::NotKulikov: return "NotKulikov";
    case Errc::BadChain: return "BadChain";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BadOrbit: return "BadOrbit";
  }
  return "Error";
}

}  // namespace degenkit
