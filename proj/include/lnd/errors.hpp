#ifndef LND_ERRORS_HPP
#define LND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lnd {

// Bad user input: malformed expression, undeclared variable, bad flag value.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Operands live in different rings.
struct RingMismatchError : std::invalid_argument {
    explicit RingMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

// exact_divide called on a non-divisible pair, or division by zero.
struct DivisionError : std::domain_error {
    explicit DivisionError(const std::string& msg) : std::domain_error(msg) {}
};

// A Groebner computation ran past its step budget. Never a wrong answer.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate was presented for a derivation it does not certify.
struct CertificateError : std::invalid_argument {
    explicit CertificateError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Internal invariant broken (assertion with a message).
struct LogicError : std::logic_error {
    explicit LogicError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lnd

#endif
