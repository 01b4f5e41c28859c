#pragma once

#include <stdexcept>
#include <string>

namespace reebforge {

// Error codes shared across the toolkit. Names are stable: they appear
// verbatim in CLI diagnostics ("error: LoopPresent: ...") and tests match
// on them.
enum class Errc {
    SyntaxError,
    DuplicateVertex,
    UnknownVertex,
    NegativeGenus,
    LoopPresent,
    GivenHeightsNotGood,
    NotGood,
    InvalidGraph,
    UnknownComponent,
    IllegalMove,
    EmptySide,
    DegreeTooSmall,
    EdgesOnBothSides,
    BadInterval,
    DanglingComponent,
    LeftoverComponent,
    NotClosedSurface,
    ParseError,
    BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace reebforge
