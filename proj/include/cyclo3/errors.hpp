#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclo3 {

/// Raised when an algebraic invariant that must hold for correct inputs is
/// violated; always signals a bug in the arithmetic layer, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A user-supplied defining polynomial was refused. `certificate` is the
/// divisor degree that exposed a factor (Reducible), the multiplicative order
/// actually observed for x (NotPrimitive), or the observed degree (WrongDegree).
class ModulusRejected : public std::invalid_argument {
 public:
  enum class Reason { WrongDegree, Reducible, NotPrimitive };

  ModulusRejected(Reason reason, std::uint64_t certificate, const std::string& what)
      : std::invalid_argument(what), reason_(reason), certificate_(certificate) {}

  Reason reason() const noexcept { return reason_; }
  std::uint64_t certificate() const noexcept { return certificate_; }

 private:
  Reason reason_;
  std::uint64_t certificate_;
};

}  // namespace cyclo3
