#include "ccx/error.hpp"

namespace ccx {

const char* code_name(Errc c) {
  switch (c) {
    case Errc::AxiomI: return "AxiomViolation(i)";
    case Errc::AxiomII: return "AxiomViolation(ii)";
    case Errc::AxiomIII: return "AxiomViolation(iii)";
    case Errc::AxiomIV: return "AxiomViolation(iv)";
    case Errc::MissingSingleton: return "MissingSingleton";
    case Errc::DuplicateCell: return "DuplicateCell";
    case Errc::RankOfMinimalNonZero: return "RankOfMinimalNonZero";
    case Errc::EmptyCell: return "EmptyCell";
    case Errc::NotOrderPreserving: return "NotOrderPreserving";
    case Errc::NoEqualRankPreimage: return "NoEqualRankPreimage";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotInC: return "NotInC";
    case Errc::NotPure: return "NotPure";
    case Errc::EmptySet: return "EmptySet";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::MaximalCellHasNoFigure: return "MaximalCellHasNoFigure";
    case Errc::DegenerateCellInComplement: return "DegenerateCellInComplement";
    case Errc::EmptyCollar: return "EmptyCollar";
    case Errc::NonConnectedTrace: return "NonConnectedTrace";
    case Errc::NotPureRelative: return "NotPureRelative";
    case Errc::UniformityViolated: return "UniformityViolated";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::JunctionViolation: return "JunctionViolation";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::VertexClash: return "VertexClash";
    case Errc::CompatibilityViolated: return "CompatibilityViolated";
    case Errc::ReflectivityViolated: return "ReflectivityViolated";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotLocalRelative: return "NotLocalRelative";
    case Errc::NotConnecting: return "NotConnecting";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::FragmentInvalid: return "FragmentInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

Error::Error(Errc c, const std::string& msg, std::string wit)
    : std::runtime_error(std::string(code_name(c)) + ": " + msg +
                         (wit.empty() ? "" : " [witness " + wit + "]")),
      code(c),
      witness(std::move(wit)) {}

void fail(Errc c, const std::string& msg, const std::string& wit) {
  throw Error(c, msg, wit);
}

}  // namespace ccx
