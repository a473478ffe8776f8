#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Base class for all validation failures raised by the library. Parse errors
// and usage errors are kept separate (ParseError) so callers can map them to
// distinct exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct VarCountMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct MixedDegrees : Error {
    using Error::Error;
};
struct EulerViolation : Error {
    using Error::Error;
};
struct NotIntegrable : Error {
    using Error::Error;
};
struct ZeroForm : Error {
    using Error::Error;
};
struct DegreeRelationViolated : Error {
    using Error::Error;
};
struct CommonFactor : Error {
    using Error::Error;
};
struct BadExponents : Error {
    using Error::Error;
};
struct PointNotOnLocus : Error {
    using Error::Error;
};
struct PointNotSingular : Error {
    using Error::Error;
};
struct NonIntegerDegree : Error {
    using Error::Error;
};
struct CertificationInconclusive : Error {
    using Error::Error;
};
struct SolverNonconvergence : Error {
    using Error::Error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t line, size_t col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    size_t line() const { return line_; }
    size_t column() const { return col_; }

  private:
    size_t line_, col_;
};

}  // namespace folia
