#pragma once

#include <stdexcept>
#include <string>

namespace ncfusion {

// Base of every error raised by the library. The CLI maps the concrete
// subclass to an exit code and a message prefix.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad point sets, invalid group tables, bad weights.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Unreadable JSON or syntax errors in textual input.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Input file missing or unreadable.
class FileError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Row counts or index lengths that do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Enumeration or matrix size beyond the configured bound.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// Operation undefined on its argument (fusing an empty word, n < 4, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Operation requires a structural property the input lacks (e.g. a delta-form).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace ncfusion
