#pragma once

#include <stdexcept>
#include <string>

namespace twochar {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation, broken action axiom, mismatched sizes.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A cochain that was required to be a 2-cocycle is not one.
class CocycleError : public Error {
public:
  using Error::Error;
};

// A configured size or search-space cap was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Operation called outside its domain (e.g. a non-commuting pair).
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace twochar
