#pragma once

#include <stdexcept>
#include <string>

namespace dehn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (0,0) is not a slope.
struct ZeroPairError : Error {
    ZeroPairError() : Error("slope: (0,0) is not a projective pair") {}
};

// The satellite slope map is undefined on the meridian.
struct MeridianInputError : Error {
    MeridianInputError() : Error("satellite_image: input slope must be rational, not 1/0") {}
};

struct DepthExceededError : Error {
    explicit DepthExceededError(const std::string& what) : Error(what) {}
};

// Structural validation failures.  `code` names the violated invariant class.
struct ValidationError : Error {
    enum class Code {
        InvalidTorusParams,
        InvalidCableParams,
        TrivialCompanion,
        MalformedPattern,
        InconsistentAttrs,
    };
    Code code;
    ValidationError(Code c, const std::string& what) : Error(what), code(c) {}
};

const char* to_string(ValidationError::Code c);

// Two rules derived contradictory values for the same property of the same
// query.  This signals a modeling bug (or inconsistent declared data) and is
// never swallowed.
struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

// DSL / CLI input errors carry a position.
struct ParseError : Error {
    int line, column;
    ParseError(int l, int c, const std::string& what)
        : Error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

}  // namespace dehn
