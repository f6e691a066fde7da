#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace duostego {

enum class ErrorKind {
    // wav
    NotRiff,
    UnsupportedDepth,
    UnsupportedCodec,
    Truncated,
    Malformed,
    // payload
    Oversize,
    LengthMismatch,
    NotByteAligned,
    // grid
    ZeroSamples,
    OutOfRange,
    CapacityExceeded,
    // lexicon
    ParseError,
    DuplicateWord,
    IncompleteCategory,
    UnknownWord,
    // grammar
    NoSkeleton,
    // pipeline
    BadSentenceLength,
    CoordinateOutOfRange,
    HeaderCorrupt,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace duostego
