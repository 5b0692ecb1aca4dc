#include "stern/error.hpp"

namespace stern {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return "InvalidArgument";
        case ErrorKind::not_odd_prime: return "NotOddPrime";
        case ErrorKind::not_invertible: return "NotInvertible";
        case ErrorKind::singular_matrix: return "SingularMatrix";
        case ErrorKind::out_of_bounds: return "OutOfBounds";
        case ErrorKind::shape_mismatch: return "ShapeMismatch";
        case ErrorKind::inconsistent_rule: return "InconsistentRule";
        case ErrorKind::invalid_sector: return "InvalidSector";
        case ErrorKind::invalid_center: return "InvalidCenter";
        case ErrorKind::search_exhausted: return "SearchExhausted";
        case ErrorKind::unsupported_format: return "UnsupportedFormat";
        case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace stern
