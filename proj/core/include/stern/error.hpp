#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stern {

enum class ErrorKind {
    invalid_argument,
    not_odd_prime,
    not_invertible,
    singular_matrix,
    out_of_bounds,
    shape_mismatch,
    inconsistent_rule,
    invalid_sector,
    invalid_center,
    search_exhausted,
    unsupported_format,
    parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace stern
