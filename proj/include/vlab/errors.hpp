#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

// Typed failure codes. Every library error carries one so callers (and the
// CLI exit-code logic) can react without string matching.
enum class Errc {
    NonFinite,
    IndexOutOfRange,
    PlugUnavailable,
    BadParam,
    OutOfDomain,
    EmptyComplement,
    ParseError,
    EvalDomain,
    NotOnBoundary,
    NotSmooth,
    EmptyRegion,
    EmptyBoundary,
    GridTooCoarse,
    OperatorUnavailable,
    BadNesting,
    BadForcing,
    NotNonnegative,
    KOutOfTheoremRange,
    ValidationError,
    Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace vlab
