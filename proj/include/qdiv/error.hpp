#pragma once

#include <stdexcept>
#include <string>

namespace qdiv {

enum class ErrorKind {
    NotSquare,
    NotHermitian,
    IndexOutOfRange,
    DimensionMismatch,
    DimensionTooSmall,
    NotBlockTriangular,
    SingularBlock,
    SingularMap,
    TimeOutOfRange,
    StepTooLarge,
    InvalidArgument,
    ConfigParse,
    ModelError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // true for failures of the numerical machinery as opposed to bad input
    bool numerical() const {
        switch (kind_) {
        case ErrorKind::SingularBlock:
        case ErrorKind::SingularMap:
        case ErrorKind::StepTooLarge:
        case ErrorKind::ModelError:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace qdiv
