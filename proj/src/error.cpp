#include "uavlink/error.hpp"

namespace uavlink {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::NonInvertible: return "non-invertible curve";
    case ErrorKind::DegenerateData: return "degenerate data";
    case ErrorKind::EmptyTable: return "empty table";
    case ErrorKind::PolicyDegenerate: return "degenerate policy";
    case ErrorKind::NonTermination: return "non-termination";
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::Io: return "I/O error";
    }
    return "error";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::InvalidArgument:
        return 2;
    case ErrorKind::Domain:
    case ErrorKind::OutOfRange:
    case ErrorKind::NonInvertible:
    case ErrorKind::DegenerateData:
    case ErrorKind::EmptyTable:
    case ErrorKind::PolicyDegenerate:
        return 3;
    case ErrorKind::NonTermination:
        return 4;
    case ErrorKind::Io:
        return 5;
    }
    return 1;
}

} // namespace uavlink
