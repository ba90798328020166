#include "degenlab/error.hpp"

namespace degenlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::InvalidPlaneCount: return "InvalidPlaneCount";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AmbiguousSymbol: return "AmbiguousSymbol";
    case ErrorKind::NoMatchingGraph: return "NoMatchingGraph";
    case ErrorKind::EmptyCurve: return "EmptyCurve";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

bool is_capacity_error(ErrorKind kind) {
    return kind == ErrorKind::TooLarge || kind == ErrorKind::SearchSpaceTooLarge ||
           kind == ErrorKind::Overflow;
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> position) {
    std::string out(to_string(kind));
    if (position) {
        out += " at offset " + std::to_string(*position);
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(decorate(kind, message, position)), kind_(kind), position_(position) {}

}  // namespace degenlab
