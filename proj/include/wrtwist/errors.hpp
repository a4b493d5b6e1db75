#pragma once

#include <stdexcept>
#include <string>

namespace wrtwist {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// D is not a positive squarefree integer.
class FieldError : public Error {
 public:
  using Error::Error;
};

class ZeroIdealError : public Error {
 public:
  ZeroIdealError() : Error("generators span the zero ideal") {}
};

// An internal consistency check failed, or the input is not what it claims
// to be (e.g. a triple that is not the canonical basis of an ideal).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

class NotTwistable : public Error {
 public:
  enum class Reason { DenomZero, NonPositive };

  explicit NotTwistable(Reason reason)
      : Error(reason == Reason::DenomZero
                  ? "basis is not twistable: Re(u)^2 == Re(v)^2"
                  : "basis is not twistable: beta <= 0"),
        reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class InsufficientBound : public Error {
 public:
  InsufficientBound(long long requested, long long safe)
      : Error("oracle bound " + std::to_string(requested) +
              " is below the safe bound " + std::to_string(safe)),
        safe_bound_(safe) {}

  long long safe_bound() const noexcept { return safe_bound_; }

 private:
  long long safe_bound_;
};

}  // namespace wrtwist
