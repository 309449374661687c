#include "tricross/error.hpp"

namespace tricross {

std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::not_involution: return "NotInvolution";
    case errc::wrong_valence: return "WrongValence";
    case errc::not_sphere: return "NotSphere";
    case errc::disconnected: return "Disconnected";
    case errc::parse_error: return "ParseError";
    case errc::label_count: return "LabelCountError";
    case errc::range_error: return "RangeError";
    case errc::coloring_impossible: return "ColoringImpossible";
    case errc::orientation_inconsistent: return "OrientationInconsistent";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::parity_error: return "ParityError";
    case errc::bound_violation: return "BoundViolation";
    case errc::bad_parameters: return "BadParameters";
    case errc::disconnected_closure: return "DisconnectedClosure";
    case errc::not_a_knot: return "NotAKnot";
    case errc::not_coprime: return "NotCoprime";
    case errc::too_large: return "TooLarge";
    case errc::give_up: return "GiveUp";
  }
  return "Unknown";
}

error::error(errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace tricross
