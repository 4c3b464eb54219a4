#pragma once

#include <stdexcept>
#include <string>

namespace tileguard {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : error {
    using error::error;
};

}  // namespace tileguard
