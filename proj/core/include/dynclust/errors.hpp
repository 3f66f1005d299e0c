#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynclust {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Remove/Reweight targeted an edge that does not exist.
class MissingEdge : public Error {
public:
    using Error::Error;
};

/// An Add targeted an edge that is already present.
class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class UnknownNode : public Error {
public:
    using Error::Error;
};

class UnknownCluster : public Error {
public:
    using Error::Error;
};

class InvalidChange : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class MissingBaseline : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace dynclust
