#pragma once

#include <stdexcept>
#include <string>

namespace hierosa {

/// Base class for all domain errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecodeError : Error {
    using Error::Error;
};
struct EmptyImage : Error {
    using Error::Error;
};
struct DegenerateStroke : Error {
    using Error::Error;
};
struct OriginNotBlack : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct EmptyForeground : Error {
    using Error::Error;
};
struct TooFewPoints : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct EmptyStrokeSet : Error {
    using Error::Error;
};
struct EmptyPool : Error {
    using Error::Error;
};
struct EmptyCorpus : Error {
    using Error::Error;
};
struct TransportError : Error {
    using Error::Error;
};
struct ProtocolError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace hierosa
