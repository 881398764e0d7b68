#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normord {

/// Polynomials from rings with different s were combined, or a value of the
/// wrong arity was supplied.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A placement breaks one of the non-attacking rules; rule() names it.
class ConstraintViolation : public std::runtime_error {
public:
    ConstraintViolation(std::string rule, const std::string& detail)
        : std::runtime_error(rule + ": " + detail), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

/// The board is not a Ferrers board and the operation requires one.
class UnsupportedBoard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A recurrence step left the region where the placement model is defined
/// (a negative effective height on a non-Ferrers board).
class OutOfModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration size guard tripped.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace normord
