#pragma once

#include <stdexcept>
#include <string>

namespace skewplane {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction input (non-prime characteristic, reducible modulus, ...).
class construction_error : public error {
public:
  using error::error;
};

/// Operation outside its domain (inverse of zero, point off the carrier line).
class domain_error : public error {
public:
  using error::error;
};

/// Constructive operation fed coincident / degenerate input.
class degenerate_input : public error {
public:
  using error::error;
};

/// Operation requires a finite model (enumeration on the quaternion plane).
class unsupported_operation : public error {
public:
  using error::error;
};

/// A checker hypothesis does not hold; carries the violated clause.
class hypothesis_violation : public error {
public:
  explicit hypothesis_violation(const std::string& clause)
      : error("hypothesis violation: " + clause), clause_(clause) {}
  const std::string& clause() const { return clause_; }

private:
  std::string clause_;
};

/// A construction invariant failed on valid input; always a bug.
class invariant_violation : public error {
public:
  using error::error;
};

}  // namespace skewplane
