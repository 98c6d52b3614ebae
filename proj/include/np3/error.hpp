// Error taxonomy for the np3 library.
//
// Every rejection the library can produce carries one of these codes; the
// CLI maps codes to exit statuses (usage-class errors vs. mathematical
// violations), so the set is part of the public surface.
#pragma once

#include <stdexcept>
#include <string>

namespace np3 {

enum class Errc {
  // Input-shape and lookup problems (usage-class).
  Empty,
  MixedDimension,
  DegenerateFacet,
  BadDimension,
  NotAFace,
  NotAFacet,
  NotAVertex,
  ParseError,
  UnknownName,
  BadParam,
  GenusTooSmall,

  // Mathematical violations on well-formed inputs.
  NotNormal,
  HasBoundary,
  NotClosedSurface,
  EdgeExists,
  NotInterior,
  LinkConditionFailed,
  BadPartition,
  BadIntersection,
  BadPairing,
  ValidationFailed,
  BoundViolated,
  Undecided,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Empty: return "Empty";
    case Errc::MixedDimension: return "MixedDimension";
    case Errc::DegenerateFacet: return "DegenerateFacet";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotAFace: return "NotAFace";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParam: return "BadParam";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::NotNormal: return "NotNormal";
    case Errc::HasBoundary: return "HasBoundary";
    case Errc::NotClosedSurface: return "NotClosedSurface";
    case Errc::EdgeExists: return "EdgeExists";
    case Errc::NotInterior: return "NotInterior";
    case Errc::LinkConditionFailed: return "LinkConditionFailed";
    case Errc::BadPartition: return "BadPartition";
    case Errc::BadIntersection: return "BadIntersection";
    case Errc::BadPairing: return "BadPairing";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::Undecided: return "Undecided";
  }
  return "UnknownError";
}

// True for errors that indicate a malformed request (bad file, unknown name,
// argument that does not denote an existing face/vertex) as opposed to a
// mathematically inadmissible operation on well-formed objects.
inline bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::Empty:
    case Errc::MixedDimension:
    case Errc::DegenerateFacet:
    case Errc::BadDimension:
    case Errc::NotAFace:
    case Errc::NotAFacet:
    case Errc::NotAVertex:
    case Errc::ParseError:
    case Errc::UnknownName:
    case Errc::BadParam:
    case Errc::GenusTooSmall:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace np3
