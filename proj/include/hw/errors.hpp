#pragma once

#include <stdexcept>
#include <string>

namespace hw {

// Bad argument: mismatched moduli, out-of-range residues, non-canonical labels.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested size exceeds the configured enumeration cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact computation produced something that cannot happen if the code is
// correct (e.g. a fusion sum that is not a rational integer). Never swallowed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hw
