#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degenlab {

enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    IndexOutOfRange,
    TooManyVertices,
    InvalidPlaneCount,
    InvalidType,
    ParseError,
    AmbiguousSymbol,
    NoMatchingGraph,
    EmptyCurve,
    NegativeCount,
    NegativeGenus,
    TooLarge,
    SearchSpaceTooLarge,
    Overflow,
    InternalInconsistency,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Capacity errors are the ones a caller can fix only by asking for less work.
bool is_capacity_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> position = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }

    // Byte offset into the parsed text, set for ParseError only.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

}  // namespace degenlab
