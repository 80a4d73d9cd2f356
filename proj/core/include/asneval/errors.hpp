#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asneval {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedDoi : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class CsvSyntaxError : public Error {
public:
    CsvSyntaxError(std::size_t line, const std::string& detail)
        : Error("CSV syntax error at line " + std::to_string(line) + ": " + detail),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MissingColumn : public Error {
public:
    explicit MissingColumn(const std::string& column)
        : Error("required column '" + column + "' not found in header"), column_(column) {}

    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class IndexNotLoaded : public Error {
public:
    IndexNotLoaded() : Error("citation index has not been built or loaded") {}
};

class InvalidYears : public Error {
public:
    using Error::Error;
};

class MissingCount : public Error {
public:
    using Error::Error;
};

class InvalidRatio : public Error {
public:
    using Error::Error;
};

class UnmatchedCandidate : public Error {
public:
    using Error::Error;
};

class EmptyCohort : public Error {
public:
    EmptyCohort() : Error("cohort contains no candidates") {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Transport-level failure (connection refused, timeout, ...) after all retries.
class NetworkError : public Error {
public:
    using Error::Error;
};

// The endpoint answered, but with a status we cannot use.
class EndpointError : public Error {
public:
    EndpointError(int status, const std::string& detail)
        : Error("endpoint returned status " + std::to_string(status) + ": " + detail),
          status_(status) {}

    int status() const noexcept { return status_; }

private:
    int status_;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class UnknownPerson : public Error {
public:
    using Error::Error;
};

}  // namespace asneval
