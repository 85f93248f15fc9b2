#pragma once

#include <stdexcept>
#include <string>

namespace levicore {

// Input that violates a contract: mismatched rings, unknown variables,
// malformed declarations. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with a character position into the offending text.
class ParseError : public InputError {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// A configured resource cap was hit. Never a wrong answer: callers either
// propagate this or record a partial result. Maps to exit code 3.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A radical hint failed its membership check; names the offending hint.
class HintRejected : public std::runtime_error {
  public:
    explicit HintRejected(const std::string& hint)
        : std::runtime_error("radical hint rejected, not in the radical: " + hint), hint_text(hint) {}
    std::string hint_text;
};

}  // namespace levicore
