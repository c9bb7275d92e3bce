#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamejl {

enum class ErrorKind {
    InvalidParams,
    TameViolation,
    SearchExhausted,
    NotASubgroup,
    CriterionViolation,
    DimensionMismatch,
    NotTwoTorsion,
    UnramifiedViolation,
    NonStrictTower,
    NonIncreasingLevels,
    IndexOutOfRange,
    NotInSubfield,
    NotNormOne,
    NotSymmetric,
    NotQuadratic,
    IotaIncoherence,
    MalformedConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can name the violated invariant.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tamejl
