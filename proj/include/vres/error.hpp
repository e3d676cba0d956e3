#pragma once

#include <stdexcept>
#include <string>

namespace vres {

// Bad arguments, malformed inputs, violated preconditions.
class ArgumentError : public std::runtime_error {
public:
  explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// A verification step that is mathematically guaranteed to hold has failed.
// Reaching this indicates a bug in the engine (or a genuinely inconsistent
// input that slipped past validation), so it is kept separate from ordinary
// argument errors and mapped to its own process exit code by the CLI.
class TheoremViolation : public std::runtime_error {
public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vres
