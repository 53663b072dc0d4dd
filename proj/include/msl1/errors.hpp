#ifndef MSL1_ERRORS_HPP
#define MSL1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msl1 {

// Operand shapes do not match (wrong vector length, M > N, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input on which the requested quantity is mathematically undefined
// (zero-norm signal, empty coefficient vector).
struct UndefinedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text file could not be parsed. `line` is 1-based, 0 if not applicable.
struct FormatError : std::runtime_error {
    long line;
    explicit FormatError(const std::string& what, long line_no = 0)
        : std::runtime_error(what), line(line_no) {}
};

// The residual ball does not intersect the range of the measurement matrix.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A synthetic source failed its compressibility check repeatedly.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace msl1

#endif
