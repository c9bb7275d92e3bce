#include "tamejl/error.hpp"

namespace tamejl {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::TameViolation: return "TameViolation";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::CriterionViolation: return "CriterionViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTwoTorsion: return "NotTwoTorsion";
    case ErrorKind::UnramifiedViolation: return "UnramifiedViolation";
    case ErrorKind::NonStrictTower: return "NonStrictTower";
    case ErrorKind::NonIncreasingLevels: return "NonIncreasingLevels";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::NotNormOne: return "NotNormOne";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::IotaIncoherence: return "IotaIncoherence";
    case ErrorKind::MalformedConfig: return "MalformedConfig";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace tamejl
