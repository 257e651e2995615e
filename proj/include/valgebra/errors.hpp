#pragma once

#include <stdexcept>
#include <string>

namespace valgebra {

enum class ErrorKind {
    context_mismatch,     // domains from different lattice contexts
    instance_mismatch,    // valuations of different instances combined
    order_violation,      // a required lattice order relation does not hold
    projection_domain,    // projection target not below the label
    unsupported,          // operation not defined for this instance
    null_argument,        // a null/absorbing valuation where one is forbidden
    not_reducible,        // quotient has no representative inside the algebra
    not_invertible,       // quotient numerator/denominator in different groups
    undefined_projection, // extended projection outside its partial window
    composition_undefined,// domination precondition of the operator fails
    domination_violation, // quotient invariant broken (construction bug)
    invalid_value,        // malformed payload (negative mass, asymmetric matrix, ...)
    not_positive_definite,
    parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace valgebra
