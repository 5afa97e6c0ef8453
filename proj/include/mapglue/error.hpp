#ifndef MAPGLUE_ERROR_HPP
#define MAPGLUE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapglue {

enum class Errc {
  NotInvolution,
  Disconnected,
  NonPlanar,
  InvalidRoot,
  ParseError,
  EmptyTree,
  NotDyck,
  LevelOutOfRange,
  RootNotOnTree,
  DecorationNotATree,
  BoundaryNotSimple,
  SizeMismatch,
  TreeTooLarge,
  BoundariesNotDisjoint,
  BoundaryHasBridge,
  MalformedCircuit,
  CircuitMissesPinch,
  CapExceeded,
  Infeasible,
  NonIntegral,
  InternalMismatch,
  CatalogMissing,
  UnknownFormat,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

inline std::string_view errc_name(Errc code)
{
  switch (code) {
  case Errc::NotInvolution: return "NotInvolution";
  case Errc::Disconnected: return "Disconnected";
  case Errc::NonPlanar: return "NonPlanar";
  case Errc::InvalidRoot: return "InvalidRoot";
  case Errc::ParseError: return "ParseError";
  case Errc::EmptyTree: return "EmptyTree";
  case Errc::NotDyck: return "NotDyck";
  case Errc::LevelOutOfRange: return "LevelOutOfRange";
  case Errc::RootNotOnTree: return "RootNotOnTree";
  case Errc::DecorationNotATree: return "DecorationNotATree";
  case Errc::BoundaryNotSimple: return "BoundaryNotSimple";
  case Errc::SizeMismatch: return "SizeMismatch";
  case Errc::TreeTooLarge: return "TreeTooLarge";
  case Errc::BoundariesNotDisjoint: return "BoundariesNotDisjoint";
  case Errc::BoundaryHasBridge: return "BoundaryHasBridge";
  case Errc::MalformedCircuit: return "MalformedCircuit";
  case Errc::CircuitMissesPinch: return "CircuitMissesPinch";
  case Errc::CapExceeded: return "CapExceeded";
  case Errc::Infeasible: return "Infeasible";
  case Errc::NonIntegral: return "NonIntegral";
  case Errc::InternalMismatch: return "InternalMismatch";
  case Errc::CatalogMissing: return "CatalogMissing";
  case Errc::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

} // namespace mapglue

#endif // MAPGLUE_ERROR_HPP
