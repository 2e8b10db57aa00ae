#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flexval {

enum class ErrorKind {
    UnknownLabel,
    OutOfRange,
    BadInterval,
    EmptyInput,
    MismatchedStates,
    InvalidModel,
    ZeroProbabilityEvidence,
    IllegalRevision,
    MissingDistribution,
    PolicyExplosion,
    Syntax,
    Schema,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind` selects the
// CLI exit code and the machine-readable error tag.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace flexval
