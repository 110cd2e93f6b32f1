#include "hilbert_ball/error.hpp"

namespace hball {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::UnequalNorms: return "UnequalNorms";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::InvalidLevel: return "InvalidLevel";
    case ErrorKind::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorKind::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

} // namespace hball
