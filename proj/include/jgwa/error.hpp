#pragma once

#include <stdexcept>
#include <string>

namespace jgwa {

enum class ErrorKind {
    ArityMismatch,
    IndexOutOfRange,
    InvalidArgument,
    NotFredholm,
    NoStabilization,
    NotInvertible,
    NotUnit,
    NotDegreeZero,
    NotAutomorphism,
    NonIntegerRoots,
    NotInShape,
    NotAntichain,
    Syntax,
    NonInvertiblePower,
    Format,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, std::string detail = {})
        : std::runtime_error(msg), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    // secondary tag, e.g. which NotUnit condition fired
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(ErrorKind::Syntax, msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace jgwa
