#pragma once

#include <stdexcept>
#include <string>

namespace xsq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a coset enumeration or element enumeration exceeds its budget,
// or when a presentation is detected to define an infinite group.
struct enumeration_overflow : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

}  // namespace xsq
