#pragma once

#include <stdexcept>
#include <string>

namespace netope {

// Invalid user-supplied parameter (bad probability, odd lattice degree, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix dimensions do not line up.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Missing registration / inconsistent model wiring.
struct config_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Operation requires a state the object is not in (e.g. untrained model).
struct state_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Behavior-policy support violated at a logged action.
struct support_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values or failed numeric procedure (non-convergence, overflow).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries the offending line number.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training diverged; carries the epoch at which the loss became non-finite.
struct training_error : std::runtime_error {
    training_error(const std::string& what, int epoch_idx)
        : std::runtime_error(what), epoch(epoch_idx) {}
    int epoch;
};

}  // namespace netope
