#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hball {

enum class ErrorKind {
    InvalidPoint,
    DimensionMismatch,
    DegenerateConfiguration,
    CoincidentPoints,
    UnequalNorms,
    PoleHit,
    RadiusTooLarge,
    InvalidLevel,
    ModulusOutOfRange,
    ArgumentOutOfRange,
    InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

// All precondition failures in the library surface as this exception.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hball
