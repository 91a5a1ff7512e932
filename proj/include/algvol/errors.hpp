#ifndef ALGVOL_ERRORS_HPP
#define ALGVOL_ERRORS_HPP

#include <stdexcept>

namespace algvol {

// Invalid input or violated precondition: maps to CLI exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation that failed internally (precision cap, certification
// failure, exhausted search): maps to CLI exit code 3.
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace algvol

#endif
