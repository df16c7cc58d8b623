#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netgeo {

// Coarse error classes; the C API and the CLI map these onto status/exit codes.
enum class ErrorCode {
    usage,         // invalid parameters or arguments
    domain,        // result undefined for this input (e.g. no nonadjacent pairs)
    cap_exceeded,  // path enumeration blew past the configured cap
    data,          // malformed input data
    io             // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorCode::data, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

// Carries the offending pair so callers can report which enumeration blew up.
class CapExceededError : public Error {
public:
    CapExceededError(int32_t source, int32_t target, int64_t cap)
        : Error(ErrorCode::cap_exceeded,
                "path enumeration for pair (" + std::to_string(source) + ", " +
                    std::to_string(target) + ") exceeds cap " + std::to_string(cap)),
          source_(source),
          target_(target),
          cap_(cap) {}
    int32_t source() const noexcept { return source_; }
    int32_t target() const noexcept { return target_; }
    int64_t cap() const noexcept { return cap_; }

private:
    int32_t source_;
    int32_t target_;
    int64_t cap_;
};

}  // namespace netgeo
