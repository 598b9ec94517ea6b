#pragma once

#include <stdexcept>
#include <string>

namespace ltlfmt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ill-sorted or undeclared use of a symbol.
class SortError : public Error {
public:
    using Error::Error;
};

/// Input that violates the grammar's structural restrictions
/// (next on a bound variable, temporal operator under a quantifier, ...).
class ScopeError : public Error {
public:
    using Error::Error;
};

/// Evaluation needed an uninterpreted symbol value the interpretation lacks.
class IncompleteInterpretation : public Error {
public:
    using Error::Error;
};

/// Direct evaluation cannot decide the formula (quantifier over a domain
/// that is not enumerable); the caller has to delegate to an SMT query.
class NeedsDelegation : public Error {
public:
    using Error::Error;
};

/// The external solver process failed, died, or answered with an error.
class BackendError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was breached.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ltlfmt
