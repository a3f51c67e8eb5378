#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelaut {

enum class ErrorKind {
    invalid_conductor,
    unsupported_degree,
    index_out_of_range,
    arity_mismatch,
    invalid_map,
    inconsistency,
    bad_reduction,
    degenerate_input,
    invalid_complex_structure,
    not_an_automorphism,
    translation_case,
    too_large,
    not_stable,
    budget_exceeded,
    nothing_to_quotient,
    invalid_datum,
    parse_error,
    domain_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

// Grammar and schema violations; carries the position (character offset or JSON path).
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::string location)
        : Error(ErrorKind::parse_error, what + " at " + location), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

  private:
    std::string location_;
};

}  // namespace abelaut
