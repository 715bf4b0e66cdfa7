#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sldecomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public PreconditionError {
public:
    DivisionByZero() : PreconditionError("division by zero polynomial") {}
};

class NonCoprimeInput : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A capped search ran out of candidates before finding a hit.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t candidates)
        : Error(what + " (" + std::to_string(candidates) + " candidates tried)"),
          candidates_(candidates) {}

    std::size_t candidates() const noexcept { return candidates_; }

private:
    std::size_t candidates_;
};

/// The bounded identity sequence for a phase is not available for the input at hand.
class StrictUnavailable : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; always a bug in the pipeline.
class PipelineError : public Error {
public:
    using Error::Error;
};

/// Malformed external input (files, CLI values).
class FormatError : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace sldecomp
