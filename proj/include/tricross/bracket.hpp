#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tricross/diagram.hpp"

namespace tricross {

// Laurent polynomial in A with exact integer coefficients. Zero
// coefficients are never stored.
class laurent_poly {
 public:
  laurent_poly() = default;
  static laurent_poly constant(std::int64_t c) { return monomial(c, 0); }
  static laurent_poly monomial(std::int64_t c, int exponent);

  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  laurent_poly& operator+=(const laurent_poly& rhs);
  laurent_poly& operator*=(const laurent_poly& rhs);
  friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
  friend laurent_poly operator*(laurent_poly a, const laurent_poly& b) { return a *= b; }
  friend bool operator==(const laurent_poly&, const laurent_poly&) = default;
  friend bool operator<(const laurent_poly& a, const laurent_poly& b) { return a.terms_ < b.terms_; }

  laurent_poly pow(int e) const;
  // A -> A^-1
  laurent_poly inverted() const;

  void add_term(std::int64_t c, int exponent);

 private:
  std::map<int, std::int64_t> terms_;
};

// Increasing exponents: "-A^-4 + 3 - A^4"; zero prints as "0".
std::string to_string(const laurent_poly& p);

// -A^2 - A^-2
laurent_poly loop_value();

struct bracket_options {
  int cap = 24;
};

// Kauffman bracket by depth-first state expansion with a rollback
// union-find over the darts.
laurent_poly bracket(const double_diagram& d, bracket_options opts = {});
// Reference state sum: every one of the 2^c states evaluated from scratch.
laurent_poly bracket_naive(const double_diagram& d, bracket_options opts = {});

int crossing_sign(const double_diagram& d, const orientation& o, int vertex);
int writhe(const double_diagram& d, const orientation& o);

// (-A^3)^(-writhe) * <D>
laurent_poly normalized(const double_diagram& d, const orientation& o, bracket_options opts = {});

enum class link_evidence { consistent, distinguished };

// Compares the sets of normalized polynomials over all orientations of
// each diagram, up to global reversal. "consistent" is only a necessary
// condition for the diagrams to show the same link.
link_evidence same_link_evidence(const double_diagram& a, const double_diagram& b,
                                 bracket_options opts = {});

}  // namespace tricross
