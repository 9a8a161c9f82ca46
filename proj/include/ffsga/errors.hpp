#pragma once

#include <stdexcept>
#include <string>

namespace ffsga {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

// A run/generator configuration is invalid (rejected before any work starts).
struct ConfigError : Error {
    using Error::Error;
};

// File system failures; the message names the offending path.
struct IoError : Error {
    using Error::Error;
};

// Malformed input files; the message names the offending key or column.
struct ParseError : IoError {
    using IoError::IoError;
};

}  // namespace ffsga
