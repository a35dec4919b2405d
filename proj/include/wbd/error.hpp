#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wbd {

/// Category of a domain failure. The CLI reports the category name and maps
/// every category to exit code 1.
enum class ErrorKind {
  dimension_mismatch,
  invalid_field,
  not_an_ideal,
  not_a_b_ideal,
  not_idempotent,
  not_orthogonal,
  not_alternative,
  invalid_weight,
  singular_matrix,
  containment_violated,
  not_a_subalgebra,
  no_identity,
  non_split,
  search_exhausted,
  verification_failure,
  invalid_input,
  parse_error,
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::invalid_field: return "invalid-field";
    case ErrorKind::not_an_ideal: return "not-an-ideal";
    case ErrorKind::not_a_b_ideal: return "not-a-b-ideal";
    case ErrorKind::not_idempotent: return "not-idempotent";
    case ErrorKind::not_orthogonal: return "not-orthogonal";
    case ErrorKind::not_alternative: return "not-alternative";
    case ErrorKind::invalid_weight: return "invalid-weight";
    case ErrorKind::singular_matrix: return "singular-matrix";
    case ErrorKind::containment_violated: return "containment-violated";
    case ErrorKind::not_a_subalgebra: return "not-a-subalgebra";
    case ErrorKind::no_identity: return "no-identity";
    case ErrorKind::non_split: return "non-split";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::verification_failure: return "verification-failure";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace wbd
