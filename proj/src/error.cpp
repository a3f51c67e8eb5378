#include "abelaut/error.hpp"

namespace abelaut {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_conductor: return "invalid-conductor";
        case ErrorKind::unsupported_degree: return "unsupported-degree";
        case ErrorKind::index_out_of_range: return "index-out-of-range";
        case ErrorKind::arity_mismatch: return "arity-mismatch";
        case ErrorKind::invalid_map: return "invalid-map";
        case ErrorKind::inconsistency: return "inconsistency";
        case ErrorKind::bad_reduction: return "bad-reduction";
        case ErrorKind::degenerate_input: return "degenerate-input";
        case ErrorKind::invalid_complex_structure: return "invalid-complex-structure";
        case ErrorKind::not_an_automorphism: return "not-an-automorphism";
        case ErrorKind::translation_case: return "translation-case";
        case ErrorKind::too_large: return "too-large";
        case ErrorKind::not_stable: return "not-stable";
        case ErrorKind::budget_exceeded: return "budget-exceeded";
        case ErrorKind::nothing_to_quotient: return "nothing-to-quotient";
        case ErrorKind::invalid_datum: return "invalid-datum";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::domain_error: return "domain-error";
    }
    return "unknown";
}

}  // namespace abelaut
