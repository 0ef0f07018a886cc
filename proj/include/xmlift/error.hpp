#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmlift {

// Every validation failure in the library is reported through AlgebraError.
// The code identifies the violated law; the witness carries the first
// offending element indices in canonical order.
enum class ErrorCode {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotHomomorphism,
  TypeMismatch,
  NotASubgroup,
  NotNormal,
  CodomainMismatch,
  SizeBound,
  ActionAxiomViolation,
  CM1Violation,
  CM2Violation,
  SquareNotCommuting,
  NotEquivariant,
  TriangleViolation,
  InducedCMViolation,
  KernelViolation,
  NotSubgroupOfKernel,
  BaseMismatch,
  PhiViolation,
  OmegaViolation,
  NotTransitive,
  KernelConditionFails,
  WellDefinednessDefect,
  H1Violation,
  H2Violation,
  H3Violation,
  NotDerivation,
  FormulaMismatch,
  RequiresEnumeration,
  NotASection,
  NotAMorphism,
  GroupoidAxiomViolation,
  GroupGroupoidViolation,
  ActionLawViolation,
  InterchangeViolation,
  StructureDefect,
};

std::string_view to_string(ErrorCode code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message,
               std::vector<std::size_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace xmlift
