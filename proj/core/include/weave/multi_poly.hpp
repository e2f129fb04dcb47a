#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weave/rational.hpp"
#include "weave/var_table.hpp"

namespace weave {

/// One non-negative exponent per variable of the owning VarTable.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded reverse lexicographic comparison over the full variable order.
/// Returns <0, 0, >0 like a three-way compare.
int grevlex_compare(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over Q. Terms are kept in grevlex-descending
/// order with no zero coefficients, so equal polynomials have equal term maps.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrevlexGreater>;

  explicit MultiPoly(VarTablePtr vars);

  static MultiPoly constant(VarTablePtr vars, const Rational& c);
  static MultiPoly variable(VarTablePtr vars, std::size_t index);
  static MultiPoly variable(VarTablePtr vars, std::string_view name);
  static MultiPoly monomial(VarTablePtr vars, Exponents e, const Rational& c = 1);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial is constant (0 included).
  std::optional<Rational> constant_value() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Grevlex leading term; throws UsageError on the zero polynomial.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Rational coefficient(const Exponents& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;

  /// Multiply by the monomial c * x^e.
  MultiPoly mul_term(const Exponents& e, const Rational& c) const;

  bool operator==(const MultiPoly& other) const;

  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

 private:
  VarTablePtr vars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& c);
MultiPoly operator*(const Rational& c, MultiPoly a);

/// Throws UsageError unless both polynomials live over the same VarTable.
void require_same_vars(const MultiPoly& a, const MultiPoly& b);

}  // namespace weave
