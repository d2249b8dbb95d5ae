#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input or violated precondition: the caller asked for something invalid.
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// The input is legitimate but outside the supported desk-scale range
// (infinitely near base points, coordinates outside Q(i), oversized words).
// Raised instead of returning a possibly wrong answer.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

// An internal invariant failed; indicates a bug, not a user mistake.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

inline void check_arg(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace cremona
