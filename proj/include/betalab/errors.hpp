#pragma once

#include <stdexcept>
#include <string>

namespace betalab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedEquation : Error { using Error::Error; };
struct BaseMismatch : Error { using Error::Error; };
struct UnknownTailError : Error { using Error::Error; };
struct ApproximateModeInconclusive : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct NotLexMaximal : Error { using Error::Error; };
struct ZeroMatrix : Error { using Error::Error; };
struct NotMixing : Error { using Error::Error; };
struct LexConditionFailed : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct InadmissibleInput : Error { using Error::Error; };
struct SpanTooLarge : Error { using Error::Error; };
struct NoBranchingFound : Error { using Error::Error; };

} // namespace betalab
