#pragma once

#include <stdexcept>
#include <string>

namespace orbiweight {

// Error taxonomy used across the library and mapped to process exit codes by
// the CLI:
//   precondition_error -> status "precondition", exit 2
//   input_error        -> status "error",        exit 1
//   internal_error     -> status "error",        exit 1
//
// precondition_error means the operation's mathematical hypotheses are not
// met; internal_error means the library caught itself producing something it
// cannot certify (never silently returned).

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated hypothesis fails (non-good triple, integral sum, ...).
struct PreconditionViolated : precondition_error {
    using precondition_error::precondition_error;
};

// The constructive witness search is not defined for the excluded triple {3,4,5}.
struct ExcludedTriple : precondition_error {
    using precondition_error::precondition_error;
};

// An instance fails its structural invariants (length mismatches, out-of-range
// orders, Disk case with k != 0, ...).
struct MalformedInstance : precondition_error {
    using precondition_error::precondition_error;
};

// The lattice-group family requires an even parameter.
struct OddParameter : precondition_error {
    using precondition_error::precondition_error;
};

// Torus parameters must satisfy p > q >= 2 with gcd(p, q) = 1.
struct InvalidTorusParameters : precondition_error {
    using precondition_error::precondition_error;
};

// Text input does not match a documented grammar.
struct ParseError : input_error {
    using input_error::input_error;
};

// A computed object failed its own validation; indicates a bug or an input on
// which a claimed construction genuinely does not go through. Diagnostics are
// carried in the message.
struct InternalInconsistency : internal_error {
    using internal_error::internal_error;
};

// A concrete group model failed relator/faithfulness validation.
struct ModelValidationFailed : internal_error {
    using internal_error::internal_error;
};

// The derived normal-form engine failed its confluence/associativity checks.
struct NormalFormIncomplete : internal_error {
    using internal_error::internal_error;
};

// Exact 64-bit arithmetic would overflow; the computation refuses to round.
struct arithmetic_overflow : internal_error {
    using internal_error::internal_error;
};

} // namespace orbiweight
