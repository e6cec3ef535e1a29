#pragma once

#include <stdexcept>
#include <string>

namespace zetawalk {

// Error taxonomy mirrored by the CLI exit codes:
//   ParseError/IO -> 2, InputError -> 3, NumericalError -> 4.

// Malformed input data (bad indices, missing parameters, precondition
// violations).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Text input that cannot be parsed; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_number(line) {}
    long line_number;
};

// A requested computation exceeds a configured enumeration cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a pole of a weighted-matrix denominator.
struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical backend failure (eigensolver did not converge, etc.).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zetawalk
