#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uavlink {

enum class ErrorKind {
    InvalidArgument,
    Domain,
    OutOfRange,
    NonInvertible,
    DegenerateData,
    EmptyTable,
    PolicyDegenerate,
    NonTermination,
    Config,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto a process exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Configuration problem attributable to a single key.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& message)
        : Error(ErrorKind::Config, key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// 2 configuration, 3 domain/math, 4 non-termination, 5 I/O.
int exit_code(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace uavlink
