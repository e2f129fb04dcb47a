#pragma once

#include <span>
#include <string>

#include "weave/multi_poly.hpp"

namespace weave {

/// num / den with gcd(num, den) = 1 and den primitive with positive leading
/// coefficient.
class RationalFunction {
 public:
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarTablePtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(int k) const;

  bool operator==(const RationalFunction& other) const;

  /// Throws UsageError where the denominator vanishes.
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction derivative(std::size_t var) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace weave
