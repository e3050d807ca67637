#ifndef APVD_ERRORS_HPP
#define APVD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apvd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations (bad arguments to a pure operation).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// Header failed magic/version/crc check: wrong key, wrong mode/table,
// or the image never carried a payload.
class InvalidHeader : public Error {
public:
    using Error::Error;
};

// Stream/image ended before the declared data was complete.
class Truncated : public Error {
public:
    using Error::Error;
};

class MalformedPayload : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    CapacityExceeded(std::uint64_t needed, std::uint64_t available)
        : Error("payload needs " + std::to_string(needed) +
                " bits but cover offers " + std::to_string(available)),
          needed_bits(needed), available_bits(available) {}
    std::uint64_t needed_bits;
    std::uint64_t available_bits;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class BoundaryOverflow : public Error {
public:
    using Error::Error;
};

class UnusablePair : public Error {
public:
    using Error::Error;
};

class SecretOutOfRange : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

class MalformedFile : public Error {
public:
    using Error::Error;
};

class UnsupportedDepth : public Error {
public:
    using Error::Error;
};

class ChannelMismatch : public Error {
public:
    using Error::Error;
};

} // namespace apvd

#endif
