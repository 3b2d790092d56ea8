#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class DisconnectedGraphError : public Error {
public:
    using Error::Error;
};

class NotAnEdgeError : public Error {
public:
    using Error::Error;
};

class SameVertexError : public Error {
public:
    using Error::Error;
};

class MeasureNotNormalizedError : public Error {
public:
    using Error::Error;
};

class SupportOutOfRangeError : public Error {
public:
    using Error::Error;
};

class OracleTooLargeError : public Error {
public:
    using Error::Error;
};

/// A candidate dual witness violated the 1-Lipschitz constraint; carries
/// one violating pair.
class NotLipschitzError : public Error {
public:
    NotLipschitzError(const std::string& what, int u, int v)
        : Error(what), u_(u), v_(v) {}
    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_;
    int v_;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class ClassEmptyForSpecError : public Error {
public:
    using Error::Error;
};

class NTooSmallError : public Error {
public:
    using Error::Error;
};

class GraphTooLargeForExhaustiveError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (edge lists, CLI arguments); message carries the
/// offending line or token.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ricci
