#pragma once

#include <stdexcept>
#include <string>

namespace klsheaf {

// Bad user input: malformed Coxeter matrices, words that do not parse,
// upsets that are not upwardly closed, and the like.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A computation produced something the underlying theory forbids
// (failed braid relation, mixed-sign root label, inconsistent solve).
// Signals a bug in this library, not in the caller.
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// An operation needed group elements beyond the enumerated ball.
class BallExhausted : public std::runtime_error {
public:
  explicit BallExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace klsheaf
