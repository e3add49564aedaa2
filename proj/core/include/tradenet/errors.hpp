#pragma once

#include <stdexcept>
#include <string>

namespace tradenet {

// Error taxonomy mapped to CLI exit codes:
//   ConfigError -> 2, DataError -> 3, NumericalError -> 4, IoError -> 5.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const noexcept { return 1; }
};

// Bad parameters, invalid configuration files, out-of-range options.
class ConfigError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

// Malformed or insufficient input data: parse failures, unknown nodes,
// unlabeled nodes, statistics undefined for the given graph.
class DataError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Convergence failures, separation, rank deficiency, non-finite values.
class NumericalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 5; }
};

} // namespace tradenet
