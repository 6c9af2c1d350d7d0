#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antiramsey {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, bad forest parts, inconsistent sizes.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A closed-form expression was requested outside the range where it is known to hold.
class OutOfValidity : public Error {
public:
    using Error::Error;
};

/// The request is well formed but falls in a regime this library does not cover.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

/// A cardinality precondition of a constructive routine failed.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Text input could not be decoded. `offset()` is the byte (or line, for
/// line-oriented formats) at which decoding stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace antiramsey
