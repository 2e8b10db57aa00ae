#include "flexval/error.hpp"

namespace flexval {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownLabel: return "unknown_label";
        case ErrorKind::OutOfRange: return "out_of_range";
        case ErrorKind::BadInterval: return "bad_interval";
        case ErrorKind::EmptyInput: return "empty_input";
        case ErrorKind::MismatchedStates: return "mismatched_states";
        case ErrorKind::InvalidModel: return "invalid_model";
        case ErrorKind::ZeroProbabilityEvidence: return "zero_probability_evidence";
        case ErrorKind::IllegalRevision: return "illegal_revision";
        case ErrorKind::MissingDistribution: return "missing_distribution";
        case ErrorKind::PolicyExplosion: return "policy_explosion";
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Schema: return "schema";
    }
    return "unknown";
}

}  // namespace flexval
