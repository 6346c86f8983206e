#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace causalmp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct NegativeCountError : ParseError {
    using ParseError::ParseError;
};

struct EmptyArmError : ParseError {
    using ParseError::ParseError;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct DegenerateTreatmentMarginalError : Error {
    using Error::Error;
};

struct LambdaOutOfRangeError : Error {
    using Error::Error;
};

struct ConditioningEventNullError : Error {
    using Error::Error;
};

struct NotDegenerateError : Error {
    using Error::Error;
};

// Raised when the two marginals admit no joint SCM. Carries the list of
// violated compatibility conditions when they are known in closed form.
struct IncompatibleError : Error {
    std::vector<std::string> violated;
    explicit IncompatibleError(const std::string& what,
                               std::vector<std::string> conditions = {})
        : Error(what), violated(std::move(conditions)) {}
};

struct InfeasibleError : Error {
    using Error::Error;
};

struct UnboundedError : Error {
    using Error::Error;
};

struct DimensionTooHighError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

}  // namespace causalmp
