#ifndef VC_ERRORS_HPP
#define VC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vc {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad magic, unsupported version, malformed text formats.
struct FormatError : Error {
    using Error::Error;
};

// File shorter/longer than its header promises, torn payloads.
struct CorruptionError : Error {
    using Error::Error;
};

// Invariant violations on otherwise well-formed data (non-finite values,
// empty inputs, wrong speaker sets, invalid configs).
struct ValidationError : Error {
    using Error::Error;
};

// Incompatible shapes between sequences, stats and model tensors.
struct DimensionError : Error {
    using Error::Error;
};

// Filesystem failures: unreadable/unwritable paths.
struct IoError : Error {
    using Error::Error;
};

// Non-finite intermediates during training or inference.
struct NumericError : Error {
    using Error::Error;
};

} // namespace vc

#endif
