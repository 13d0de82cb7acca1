#pragma once

#include <stdexcept>
#include <string>

namespace hiero {

enum class ErrorKind {
    OddLength,
    NotDoubleOccurrence,
    EmptyToken,
    UnknownLetter,
    SameLetter,
    InvalidMatrix,
    InvalidGraph,
    BadArgument,
    IoError,
    UnknownSubcommand,
    DimensionTooLarge,
    BoundExceeded,
};

const char* to_string(ErrorKind kind);

// Domain error. exit_code() matches the CLI contract: 1 for malformed
// input, 2 for size limits (DimensionTooLarge, BoundExceeded).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    int exit_code() const noexcept {
        return (kind_ == ErrorKind::DimensionTooLarge || kind_ == ErrorKind::BoundExceeded) ? 2 : 1;
    }

private:
    ErrorKind kind_;
};

}  // namespace hiero
