#pragma once

#include <stdexcept>
#include <string>

namespace ordlim {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed data, violated preconditions, limits.
class InputError : public Error {
public:
    using Error::Error;
};

/// A library invariant failed; always indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class CycleError : public InputError {
public:
    using InputError::InputError;
};

class NotTransitive : public InputError {
public:
    using InputError::InputError;
};

class EmptySubset : public InputError {
public:
    using InputError::InputError;
};

class SizeLimit : public InputError {
public:
    using InputError::InputError;
};

class BudgetExceeded : public InputError {
public:
    using InputError::InputError;
};

class NotIntervalOrder : public InputError {
public:
    using InputError::InputError;
};

class NotInPMinus : public InputError {
public:
    using InputError::InputError;
};

/// A produced measure left the closed triangle {0 <= x <= y <= 1}.
class InvariantError : public InternalError {
public:
    using InternalError::InternalError;
};

class InternalInvariantError : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace ordlim
