#include "hiero/errors.hpp"

namespace hiero {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OddLength: return "OddLength";
        case ErrorKind::NotDoubleOccurrence: return "NotDoubleOccurrence";
        case ErrorKind::EmptyToken: return "EmptyToken";
        case ErrorKind::UnknownLetter: return "UnknownLetter";
        case ErrorKind::SameLetter: return "SameLetter";
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::InvalidGraph: return "InvalidGraph";
        case ErrorKind::BadArgument: return "BadArgument";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::UnknownSubcommand: return "UnknownSubcommand";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
    }
    return "Error";
}

}  // namespace hiero
