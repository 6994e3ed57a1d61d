#include "hyp/errors.hpp"

namespace hyp {

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::SingularMatrix: return "SingularMatrix";
    case Fault::IdentityElement: return "IdentityElement";
    case Fault::ComplexElement: return "ComplexElement";
    case Fault::NonpositiveRadius: return "NonpositiveRadius";
    case Fault::DegenerateQuadruple: return "DegenerateQuadruple";
    case Fault::SharedEndpoint: return "SharedEndpoint";
    case Fault::NotOrthogonal: return "NotOrthogonal";
    case Fault::DegenerateHexagon: return "DegenerateHexagon";
    case Fault::BranchMismatch: return "BranchMismatch";
    case Fault::HypothesisViolated: return "HypothesisViolated";
    case Fault::NonpositiveA: return "NonpositiveA";
    case Fault::IntersectingAxes: return "IntersectingAxes";
    case Fault::NoPantsSolution: return "NoPantsSolution";
    case Fault::CaseGap: return "CaseGap";
    case Fault::BoundaryMismatch: return "BoundaryMismatch";
    case Fault::UnboundedBox: return "UnboundedBox";
    case Fault::BadParameters: return "BadParameters";
    case Fault::CapExceeded: return "CapExceeded";
    case Fault::AmbiguousHit: return "AmbiguousHit";
    case Fault::BadPreset: return "BadPreset";
  }
  return "Unknown";
}

}  // namespace hyp
