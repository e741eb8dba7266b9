#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mostset {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a raw eventually-periodic set description is ill-formed
/// (zero period, residue outside [0,period), prefix/threshold mismatch).
struct InvalidSpec : Error {
    using Error::Error;
};

/// Malformed input data (bad JSON shape, bad DFA table, bad text format).
struct InputError : Error {
    using Error::Error;
};

/// Most-intersection of an empty collection is undefined.
struct EmptyCollection : Error {
    using Error::Error;
};

/// The Most predicate requires a countably infinite universe.
struct UniverseNotInfinite : Error {
    using Error::Error;
};

/// Exact-mode evaluation needs a density certificate that the family
/// does not provide for the requested element.
struct CertificateRequired : Error {
    using Error::Error;
};

/// A string or transition uses a symbol outside the declared alphabet,
/// or two automata are combined over different alphabets.
struct AlphabetMismatch : Error {
    using Error::Error;
};

/// Hypergraph violates its invariants (empty edge list, empty edge,
/// edge vertex not in the vertex set).
struct InvalidHypergraph : Error {
    using Error::Error;
};

/// Product construction exceeded the configured state cap.
struct StateLimitExceeded : Error {
    using Error::Error;
};

/// Syntax error in a regular expression; `position` is the 0-based
/// byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;

    ParseError(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
};

}  // namespace mostset
