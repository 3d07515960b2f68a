#pragma once

#include <stdexcept>
#include <string>

namespace netft {

// Bad arguments or malformed configuration (CLI exit code 1).
struct invalid_input_error : std::invalid_argument {
    explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical or internal-consistency failure, e.g. an inverse transform whose
// imaginary residue exceeds its bound (CLI exit code 2).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem trouble (CLI exit code 3).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netft
