#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A requested quantity lies beyond the tracked order of a truncated object.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// A functional or recurrence stops being regular (zero norm, zero leading coefficient).
class RegularityError : public Error {
public:
    RegularityError(const std::string& what, int level) : Error(what), level_(level) {}
    int level() const noexcept { return level_; }

private:
    int level_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A pipeline stage of a named case failed; `stage` names where.
class CaseError : public Error {
public:
    CaseError(const std::string& stage, const std::string& what)
        : Error(stage + ": " + what), stage_(stage) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace qmap
