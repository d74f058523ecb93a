#pragma once

#include <stdexcept>
#include <string>

namespace comprelie {

// Bad data supplied by the caller: malformed files, shape mismatches,
// violated preconditions. The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematically well-formed request outside the operation's domain,
// e.g. asking for the Wells class of an incompatible automorphism pair.
// Also exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A case the library deliberately does not cover.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant: a certificate failed its own re-check.
// Exit code 2; never a user's fault.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace comprelie
