#pragma once

#include <stdexcept>
#include <string>

namespace umbracomb {

/// Base of every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands carry incompatible generator families (e.g. `a` vs `h`).
struct family_error : error {
    using error::error;
};

/// A constant term or scalar that must be invertible is not.
struct unit_error : error {
    using error::error;
};

/// Truncated series have different orders.
struct order_error : error {
    using error::error;
};

/// Inner series of a composition has a nonzero constant term.
struct composition_error : error {
    using error::error;
};

/// Compositional inverse requested for a series without an invertible linear term.
struct inversion_error : error {
    using error::error;
};

/// Coefficient index beyond the order of a series.
struct range_error : error {
    using error::error;
};

/// Moment requested past the truncation order of an umbra.
struct truncation_error : error {
    using error::error;
};

/// Expansion into too few variables to be faithful.
struct faithfulness_error : error {
    using error::error;
};

/// Polynomial is not invariant under permutation of its variables.
struct symmetry_error : error {
    using error::error;
};

/// Empty sequence handed to a parking-function predicate.
struct arity_error : error {
    using error::error;
};

/// Set partitions over different ground sets compared.
struct ground_error : error {
    using error::error;
};

/// A self-check inside the library failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

/// Malformed serialized input.
struct parse_error : error {
    using error::error;
};

}  // namespace umbracomb
