#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weave/multi_poly.hpp"

namespace weave {

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);
MultiPoly partial_derivative(const MultiPoly& f, std::string_view var);

/// A variable-by-variable rational substitution into a (possibly different)
/// target table. Source variables without an explicit image are sent to the
/// target variable of the same name.
class Substitution {
 public:
  Substitution(VarTablePtr source, VarTablePtr target);

  /// var -> num / den, both over the target table. den must be nonzero.
  Substitution& set(std::size_t var, MultiPoly num, MultiPoly den);
  Substitution& set(std::size_t var, MultiPoly num);
  Substitution& set(std::string_view var, MultiPoly num, MultiPoly den);
  Substitution& set(std::string_view var, MultiPoly num);

  const VarTablePtr& source() const { return source_; }
  const VarTablePtr& target() const { return target_; }
  /// Image of one source variable as (num, den).
  std::pair<MultiPoly, MultiPoly> image(std::size_t var) const;

 private:
  VarTablePtr source_;
  VarTablePtr target_;
  std::map<std::size_t, std::pair<MultiPoly, MultiPoly>> images_;
};

struct SubstitutionResult {
  MultiPoly result;   ///< g = cleared * (f o map), a polynomial
  MultiPoly cleared;  ///< product of den_v ^ deg_v(f)
};

SubstitutionResult substitute(const MultiPoly& f, const Substitution& map);

/// Maximal total degree of the terms of f restricted to one variable group.
int group_degree(const MultiPoly& f, VarGroup group);

struct Bidegree {
  int x = 0;  ///< degree in X0..Xn (delta)
  int u = 0;  ///< degree in u0..un (d)
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// (delta, d) when every term has X-degree delta and u-degree d; nullopt
/// otherwise. Throws UsageError on the zero polynomial.
std::optional<Bidegree> bidegree_of(const MultiPoly& f);

/// a / b when b divides a exactly, nullopt otherwise. Throws on b == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Coefficients of f viewed as a univariate polynomial in var
/// (index k holds the coefficient of var^k; each coefficient is var-free).
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var);
MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var);

/// Sylvester resultant of f and g with respect to var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// f scaled to integer coefficients with content 1 and positive grevlex
/// leading coefficient. Zero stays zero.
MultiPoly primitive_part(const MultiPoly& f);

/// Greatest common divisor, normalized as by primitive_part().
MultiPoly multivar_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly multivar_gcd(std::span<const MultiPoly> fs);

}  // namespace weave
