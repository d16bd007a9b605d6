#pragma once

#include <stdexcept>
#include <string>

namespace qalpha {

/// Invalid argument to an algebraic operation (zero inverse, malformed
/// permutation, negative factorial argument, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A rational function of q has a genuine pole at q = 1.
struct limit_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact polynomial division left a nonzero remainder.
struct divisibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two formulas that must agree produced different values.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Specializing q (or alpha) to a rational value hit a vanishing denominator.
struct bad_specialization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hypergeometric parameter lists that do not terminate, or a denominator
/// Pochhammer vanishing inside the summation range.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Size/degree guard exceeded (CLI protection against rewriting blow-up).
struct limit_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expression parse failure; `pos` is the 0-based offset into the input.
struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(std::size_t position, const std::string& what)
        : std::runtime_error(what + " at position " + std::to_string(position)), pos(position) {}
};

}  // namespace qalpha
