#pragma once

#include <stdexcept>
#include <string>

namespace postlie {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands (or a matrix and a scalar) live over different fields.
struct field_mismatch_error : error {
  using error::error;
};

// Dimension / shape disagreement.
struct shape_error : error {
  using error::error;
};

// A named constraint on input data was violated (bad prime, parameter
// predicate, malformed tensor, ...). The message names the predicate.
struct constraint_error : error {
  using error::error;
};

// An operation was called outside its stated hypotheses (e.g. an algebra
// is not 2-step nilpotent, a product is not pre-Lie).
struct hypothesis_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct unknown_entry_error : error {
  using error::error;
};

}  // namespace postlie
