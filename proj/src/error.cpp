#include "fusion/error.hpp"

namespace fusion {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ForeignSubgroup: return "ForeignSubgroup";
    case ErrorKind::SubgroupCapExceeded: return "SubgroupCapExceeded";
    case ErrorKind::MissingPrime: return "MissingPrime";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ElementOutsideH: return "ElementOutsideH";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::ImageNotContained: return "ImageNotContained";
    case ErrorKind::MapCapExceeded: return "MapCapExceeded";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotPSubgroup: return "NotPSubgroup";
    case ErrorKind::DifferentUnderlyingGroup: return "DifferentUnderlyingGroup";
    case ErrorKind::DefinitionDisagreement: return "DefinitionDisagreement";
    case ErrorKind::NotIsoInF: return "NotIsoInF";
    case ErrorKind::NotNormalizedRepresentative: return "NotNormalizedRepresentative";
    case ErrorKind::NotNormalInF: return "NotNormalInF";
    case ErrorKind::NotSylow: return "NotSylow";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
    case ErrorKind::ContainmentViolated: return "ContainmentViolated";
    case ErrorKind::ClauseDisagreement: return "ClauseDisagreement";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::ClassifierCapExceeded: return "ClassifierCapExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_cap_error(ErrorKind kind) {
  return kind == ErrorKind::OrderCapExceeded || kind == ErrorKind::SubgroupCapExceeded ||
         kind == ErrorKind::MapCapExceeded || kind == ErrorKind::ClassifierCapExceeded;
}

bool is_disagreement_error(ErrorKind kind) {
  return kind == ErrorKind::DefinitionDisagreement || kind == ErrorKind::CriterionDisagreement ||
         kind == ErrorKind::ClauseDisagreement || kind == ErrorKind::MethodDisagreement ||
         kind == ErrorKind::NoFactorization;
}

}  // namespace fusion
