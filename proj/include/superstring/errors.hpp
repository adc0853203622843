#pragma once

#include <stdexcept>

namespace superstring {

/// Malformed input: bad file contents, out-of-range parameters, violated
/// preconditions. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed data that breaks a stated operation contract (for example a
/// compression query against a string that is not a superstring). Exit code 2.
class contract_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a configured capacity bound such as the subset-DP bitmask
/// width or an enumeration budget. Exit code 3.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace superstring
