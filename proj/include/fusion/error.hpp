#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusion {

enum class ErrorKind {
  // permgroup_core
  OrderCapExceeded,
  MalformedPermutation,
  UnknownName,
  ForeignSubgroup,
  SubgroupCapExceeded,
  MissingPrime,
  NotNormal,
  ElementOutsideH,
  NotIsomorphism,
  // morphisms
  ImageNotContained,
  MapCapExceeded,
  NotAutomorphism,
  // fusion_base
  NotPSubgroup,
  DifferentUnderlyingGroup,
  // saturation
  DefinitionDisagreement,
  NotIsoInF,
  // local_structure
  NotNormalizedRepresentative,
  NotNormalInF,
  // transfer_invariants
  NotSylow,
  NotSaturated,
  CriterionDisagreement,
  ContainmentViolated,
  ClauseDisagreement,
  // essential_alperin
  MethodDisagreement,
  NoFactorization,
  // classifier
  ClassifierCapExceeded,
  // input handling
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// True for errors raised when a configured size limit is hit.
bool is_cap_error(ErrorKind kind);

/// True for errors that signal two independent computations disagreeing,
/// i.e. an implementation bug rather than bad input.
bool is_disagreement_error(ErrorKind kind);

class FusionError : public std::runtime_error {
 public:
  FusionError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fusion
