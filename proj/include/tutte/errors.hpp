#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

// Common base so the CLI can map all library failures to one exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing polynomials/elements over different signatures.
struct SignatureError : Error {
    explicit SignatureError(const std::string& msg) : Error(msg) {}
};

// An exponent left the declared domain of its axis after canonicalization.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Specialization hit an axis with no assigned value.
struct MissingAssignmentError : Error {
    explicit MissingAssignmentError(const std::string& msg) : Error(msg) {}
};

// A structure failed its defining axioms (rank axioms, exchange, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Input exceeds a documented size cap.
struct CapError : Error {
    explicit CapError(const std::string& msg) : Error(msg) {}
};

// Malformed input document.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace tutte
