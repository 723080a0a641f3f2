#pragma once

#include <stdexcept>
#include <string>

namespace ccbench {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a helper (e.g. b(a) with a < 1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// NaN (or otherwise non-finite) input component reached a reference function.
class NanInputError : public Error {
public:
    using Error::Error;
};

/// Malformed bit-pattern text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Requested precision is not available on this build.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole (Joukowski forward map at zero, cross map at the origin).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Wire protocol violation: malformed line, closed channel, unexpected reply.
class ProtocolError : public Error {
public:
    using Error::Error;
};

class VersionError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

class TimeoutError : public ProtocolError {
public:
    using ProtocolError::ProtocolError;
};

/// Bad command-line usage or unknown names (functions, precisions, modes).
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace ccbench
