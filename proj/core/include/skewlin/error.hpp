#pragma once

#include <stdexcept>
#include <string>

namespace skewlin {

/// Two scalars or objects from different scalar domains were mixed.
struct domain_mismatch : std::invalid_argument {
    explicit domain_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Inverse of zero, or division by zero.
struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/// Vectors or maps over mismatched spaces (dimension or chirality).
struct space_mismatch : std::invalid_argument {
    explicit space_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Text input did not match the matrix-file grammar.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

}  // namespace skewlin
