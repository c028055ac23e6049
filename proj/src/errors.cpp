#include "vlab/errors.hpp"

namespace vlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonFinite: return "NonFinite";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::PlugUnavailable: return "PlugUnavailable";
        case Errc::BadParam: return "BadParam";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::EmptyComplement: return "EmptyComplement";
        case Errc::ParseError: return "ParseError";
        case Errc::EvalDomain: return "EvalDomain";
        case Errc::NotOnBoundary: return "NotOnBoundary";
        case Errc::NotSmooth: return "NotSmooth";
        case Errc::EmptyRegion: return "EmptyRegion";
        case Errc::EmptyBoundary: return "EmptyBoundary";
        case Errc::GridTooCoarse: return "GridTooCoarse";
        case Errc::OperatorUnavailable: return "OperatorUnavailable";
        case Errc::BadNesting: return "BadNesting";
        case Errc::BadForcing: return "BadForcing";
        case Errc::NotNonnegative: return "NotNonnegative";
        case Errc::KOutOfTheoremRange: return "KOutOfTheoremRange";
        case Errc::ValidationError: return "ValidationError";
        case Errc::Io: return "Io";
    }
    return "UnknownError";
}

} // namespace vlab
