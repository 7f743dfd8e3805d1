#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

/// An operation was called outside its domain (non-unit matrix, bad
/// parameter, out-of-scope triple...). The CLI maps these to exit code 2.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertibleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The exact answer exists but needs scalars outside Q(i).
class FieldLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A certificate failed its own exact check. Never expected; exit code 3.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sl2
