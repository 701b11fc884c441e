#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

enum class Errc {
  AxiomI,
  AxiomII,
  AxiomIII,
  AxiomIV,
  MissingSingleton,
  DuplicateCell,
  RankOfMinimalNonZero,
  EmptyCell,
  NotOrderPreserving,
  NoEqualRankPreimage,
  NotSurjective,
  DomainMismatch,
  ShapeMismatch,
  NotClosed,
  NotInC,
  NotPure,
  EmptySet,
  UnknownVertex,
  MaximalCellHasNoFigure,
  DegenerateCellInComplement,
  EmptyCollar,
  NonConnectedTrace,
  NotPureRelative,
  UniformityViolated,
  PreconditionFailed,
  JunctionViolation,
  RelationViolated,
  VertexClash,
  CompatibilityViolated,
  ReflectivityViolated,
  Degenerate,
  NotLocalRelative,
  NotConnecting,
  EndpointMismatch,
  FragmentInvalid,
  ParseError,
  SchemaVersionUnsupported,
  InvalidArgument,
  InternalCheckFailed,
};

const char* code_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  std::string witness;
  Error(Errc c, const std::string& msg, std::string wit = "");
};

[[noreturn]] void fail(Errc c, const std::string& msg, const std::string& wit = "");

}  // namespace ccx
