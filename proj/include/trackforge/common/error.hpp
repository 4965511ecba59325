#pragma once

#include <stdexcept>
#include <string>

namespace trackforge {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes
// (UsageError -> 2, ConfigError -> 3, IoError -> 4, anything else -> 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularState : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularInnovation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CombinatorialLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trackforge
