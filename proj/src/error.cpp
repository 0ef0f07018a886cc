#include "xmlift/error.hpp"

namespace xmlift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::CodomainMismatch: return "CodomainMismatch";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::ActionAxiomViolation: return "ActionAxiomViolation";
    case ErrorCode::CM1Violation: return "CM1Violation";
    case ErrorCode::CM2Violation: return "CM2Violation";
    case ErrorCode::SquareNotCommuting: return "SquareNotCommuting";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::InducedCMViolation: return "InducedCMViolation";
    case ErrorCode::KernelViolation: return "KernelViolation";
    case ErrorCode::NotSubgroupOfKernel: return "NotSubgroupOfKernel";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::PhiViolation: return "PhiViolation";
    case ErrorCode::OmegaViolation: return "OmegaViolation";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::KernelConditionFails: return "KernelConditionFails";
    case ErrorCode::WellDefinednessDefect: return "WellDefinednessDefect";
    case ErrorCode::H1Violation: return "H1Violation";
    case ErrorCode::H2Violation: return "H2Violation";
    case ErrorCode::H3Violation: return "H3Violation";
    case ErrorCode::NotDerivation: return "NotDerivation";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::RequiresEnumeration: return "RequiresEnumeration";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::GroupoidAxiomViolation: return "GroupoidAxiomViolation";
    case ErrorCode::GroupGroupoidViolation: return "GroupGroupoidViolation";
    case ErrorCode::ActionLawViolation: return "ActionLawViolation";
    case ErrorCode::InterchangeViolation: return "InterchangeViolation";
    case ErrorCode::StructureDefect: return "StructureDefect";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::vector<std::size_t>& witness) {
  std::string out{to_string(code)};
  out += ": ";
  out += message;
  if (!witness.empty()) {
    out += " [witness";
    for (auto w : witness) {
      out += ' ';
      out += std::to_string(w);
    }
    out += ']';
  }
  return out;
}

}  // namespace

AlgebraError::AlgebraError(ErrorCode code, const std::string& message,
                           std::vector<std::size_t> witness)
    : std::runtime_error(decorate(code, message, witness)),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace xmlift
