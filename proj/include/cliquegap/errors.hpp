#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InversionOfZero : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DuplicateNode : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct InvalidTarget : Error {
    using Error::Error;
};
struct ParameterError : Error {
    using Error::Error;
};
struct ConstructionFailed : Error {
    using Error::Error;
};
struct GraphFormatError : Error {
    using Error::Error;
};
struct FormatViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t line = 0;
    ParseError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Thrown when an exhaustive enumeration would exceed its budget. Carries the
// best bound found so far when the caller was an anytime search.
struct BudgetExceeded : Error {
    std::uint64_t best_found = 0;
    explicit BudgetExceeded(const std::string& msg, std::uint64_t best = 0)
        : Error(msg), best_found(best) {}
};

} // namespace cg
