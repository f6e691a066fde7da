#include "duostego/error.hpp"

namespace duostego {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotRiff: return "NotRiff";
    case ErrorKind::UnsupportedDepth: return "UnsupportedDepth";
    case ErrorKind::UnsupportedCodec: return "UnsupportedCodec";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::Oversize: return "Oversize";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotByteAligned: return "NotByteAligned";
    case ErrorKind::ZeroSamples: return "ZeroSamples";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateWord: return "DuplicateWord";
    case ErrorKind::IncompleteCategory: return "IncompleteCategory";
    case ErrorKind::UnknownWord: return "UnknownWord";
    case ErrorKind::NoSkeleton: return "NoSkeleton";
    case ErrorKind::BadSentenceLength: return "BadSentenceLength";
    case ErrorKind::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorKind::HeaderCorrupt: return "HeaderCorrupt";
    }
    return "Unknown";
}

} // namespace duostego
