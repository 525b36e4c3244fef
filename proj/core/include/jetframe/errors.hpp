#ifndef JETFRAME_ERRORS_HPP
#define JETFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetframe {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define JETFRAME_ERROR(Name)                      \
    struct Name : Error {                         \
        explicit Name(const std::string& what)    \
            : Error(#Name ": " + what) {}         \
    }

JETFRAME_ERROR(UnassignedVariable);
JETFRAME_ERROR(UnsupportedVariable);
JETFRAME_ERROR(InvalidConfig);
JETFRAME_ERROR(RangeError);
JETFRAME_ERROR(NoValidLambda);
JETFRAME_ERROR(ReservedIndex);
JETFRAME_ERROR(WrongCase);
JETFRAME_ERROR(InvalidDirection);
JETFRAME_ERROR(NonInvertibleCurve);
JETFRAME_ERROR(SamplingExhausted);
JETFRAME_ERROR(Unrepresentable);
JETFRAME_ERROR(ParseError);

#undef JETFRAME_ERROR

}  // namespace jetframe

#endif
