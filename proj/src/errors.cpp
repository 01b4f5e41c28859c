#include "reebforge/errors.hpp"

namespace reebforge {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::NegativeGenus: return "NegativeGenus";
        case Errc::LoopPresent: return "LoopPresent";
        case Errc::GivenHeightsNotGood: return "GivenHeightsNotGood";
        case Errc::NotGood: return "NotGood";
        case Errc::InvalidGraph: return "InvalidGraph";
        case Errc::UnknownComponent: return "UnknownComponent";
        case Errc::IllegalMove: return "IllegalMove";
        case Errc::EmptySide: return "EmptySide";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::EdgesOnBothSides: return "EdgesOnBothSides";
        case Errc::BadInterval: return "BadInterval";
        case Errc::DanglingComponent: return "DanglingComponent";
        case Errc::LeftoverComponent: return "LeftoverComponent";
        case Errc::NotClosedSurface: return "NotClosedSurface";
        case Errc::ParseError: return "ParseError";
        case Errc::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

} // namespace reebforge
