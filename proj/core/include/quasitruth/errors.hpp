#pragma once

#include <stdexcept>

namespace quasitruth {

/// A knowledge-base document failed schema validation or could not be read.
struct KbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation met an unbound variable or a constant with no denotation.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A relation's known_in / known_out / unknown lists do not partition the
/// tuple space (overlap, gap, or a tuple outside the domain).
struct PartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace quasitruth
