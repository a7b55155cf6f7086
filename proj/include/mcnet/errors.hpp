#pragma once

#include <stdexcept>
#include <string>

namespace mcnet {

// Malformed inputs: ragged grids, missing/incoherent column labels,
// unparseable files. Distinct from axiom failures, which are verdicts.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter ranges violated (t out of range, omega > r, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Construction parameters admit no non-star entry at all.
class EmptySchemeError : public ParameterError {
public:
    explicit EmptySchemeError(const std::string& what) : ParameterError(what) {}
};

// Erasure decoding asked to proceed with fewer than k symbols.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

// Exact-mode evaluation requested where only the continuous convention applies.
class ConventionError : public ParameterError {
public:
    explicit ConventionError(const std::string& what) : ParameterError(what) {}
};

} // namespace mcnet
