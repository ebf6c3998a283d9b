#pragma once

#include <stdexcept>

namespace canonfan {

/// A mathematically required refusal (e.g. universal basis of an incomplete fan);
/// distinct from input errors so the CLI can map exit codes.
struct refusal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace canonfan
