#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tricross {

enum class errc {
  not_involution,
  wrong_valence,
  not_sphere,
  disconnected,
  parse_error,
  label_count,
  range_error,
  coloring_impossible,
  orientation_inconsistent,
  precondition_violated,
  parity_error,
  bound_violation,
  bad_parameters,
  disconnected_closure,
  not_a_knot,
  not_coprime,
  too_large,
  give_up,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tricross
