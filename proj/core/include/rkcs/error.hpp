#pragma once

#include <stdexcept>
#include <string>

namespace rkcs {

/// Thrown when a caller breaks a documented precondition (bad index,
/// non-permutation, empty selection, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input text. The message names the offending line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line number, 0 when the error is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that uses a feature this library does not support.
class UnsupportedFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed input whose content is inconsistent (dimension mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] void contract_failed(const char* expr, const char* file, int line, const std::string& msg);
}  // namespace detail

}  // namespace rkcs

#define RKCS_EXPECTS(cond, msg)                                                  \
    do {                                                                         \
        if (!(cond)) ::rkcs::detail::contract_failed(#cond, __FILE__, __LINE__, (msg)); \
    } while (false)
