#pragma once

#include <stdexcept>
#include <string>

namespace regquot {

/// Base of every error raised by the library. The CLI maps InputError to
/// exit code 2 and MathError to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad JSON, bad parameters).
class InputError : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis does not hold for the given data.
class MathError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class BadParams : public InputError {
public:
    using InputError::InputError;
};

class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class NotMinimal : public MathError {
public:
    using MathError::MathError;
};

class NotRegularQuotients : public MathError {
public:
    NotRegularQuotients(std::size_t step, const std::string& what)
        : MathError(what), step_(step) {}
    /// 1-based index k of the first failing colon (f_1..f_{k-1}):f_k.
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class MixedStepDegrees : public MathError {
public:
    using MathError::MathError;
};

class NotProvenExact : public MathError {
public:
    using MathError::MathError;
};

class UnsupportedShape : public MathError {
public:
    using MathError::MathError;
};

class NotBipartite : public MathError {
public:
    using MathError::MathError;
};

class OddWalk : public MathError {
public:
    using MathError::MathError;
};

class TieUnresolved : public MathError {
public:
    using MathError::MathError;
};

}  // namespace regquot
