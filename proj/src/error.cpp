#include "jgwa/error.hpp"

namespace jgwa {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotFredholm: return "NotFredholm";
        case ErrorKind::NoStabilization: return "NoStabilization";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::NotDegreeZero: return "NotDegreeZero";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::NonIntegerRoots: return "NonIntegerRoots";
        case ErrorKind::NotInShape: return "NotInShape";
        case ErrorKind::NotAntichain: return "NotAntichain";
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::NonInvertiblePower: return "NonInvertiblePower";
        case ErrorKind::Format: return "Format";
    }
    return "Unknown";
}

}  // namespace jgwa
