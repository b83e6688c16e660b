#include "hesscalc/errors.hpp"

namespace hesscalc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::division_by_zero_value: return "DivisionByZeroValue";
    case Errc::domain_violation: return "DomainViolation";
    case Errc::order_exceeded: return "OrderExceeded";
    case Errc::outside_domain: return "OutsideDomain";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::non_positive_coordinate: return "NonPositiveCoordinate";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::frame_mismatch: return "FrameMismatch";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::insufficient_jet_order: return "InsufficientJetOrder";
    case Errc::non_convex_iterate: return "NonConvexIterate";
    case Errc::newton_diverged: return "NewtonDiverged";
    case Errc::schedule_too_aggressive: return "ScheduleTooAggressive";
    case Errc::support_leak: return "SupportLeak";
    case Errc::bound_not_applicable: return "BoundNotApplicable";
    case Errc::not_closed: return "NotClosed";
    case Errc::zero_degree_p: return "ZeroDegreeP";
    case Errc::not_a_cone: return "NotACone";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::internal_check: return "InternalCheck";
  }
  return "UnknownError";
}

}  // namespace hesscalc
