#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

enum class Fault {
  SingularMatrix,
  IdentityElement,
  ComplexElement,
  NonpositiveRadius,
  DegenerateQuadruple,
  SharedEndpoint,
  NotOrthogonal,
  DegenerateHexagon,
  BranchMismatch,
  HypothesisViolated,
  NonpositiveA,
  IntersectingAxes,
  NoPantsSolution,
  CaseGap,
  BoundaryMismatch,
  UnboundedBox,
  BadParameters,
  CapExceeded,
  AmbiguousHit,
  BadPreset,
};

const char* fault_name(Fault f);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(Fault f, const std::string& msg)
      : std::runtime_error(std::string(fault_name(f)) + ": " + msg), fault_(f) {}
  Fault fault() const noexcept { return fault_; }

 private:
  Fault fault_;
};

[[noreturn]] inline void fail(Fault f, const std::string& msg) { throw GeometryError(f, msg); }

}  // namespace hyp
