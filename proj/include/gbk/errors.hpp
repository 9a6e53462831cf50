#pragma once

#include <stdexcept>
#include <string>

namespace gbk {

// Malformed user input: unreadable files, bad literals, out-of-range arguments,
// schema violations. CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical check failed: a verified precondition does not hold, a
// witness-producing validation found a counterexample where none is allowed,
// or an internal consistency assertion fired. CLI maps this to exit code 2.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gbk
