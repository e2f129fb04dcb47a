#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weave/multi_poly.hpp"
#include "weave/poly_matrix.hpp"

namespace weave::check {

/// Seeded source of small random values for property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed = 5489u) : rng_(seed) {}

  int integer(int lo, int hi);
  /// a/b with |a| <= range, 1 <= b <= range.
  Rational rational(int range);
  Rational nonzero_rational(int range);

  /// Up to `max_terms` terms of total degree <= max_degree.
  MultiPoly poly(const VarTablePtr& vars, int max_degree, int max_terms, int coeff_range = 4);
  /// Like poly() but never zero.
  MultiPoly nonzero_poly(const VarTablePtr& vars, int max_degree, int max_terms,
                         int coeff_range = 4);
  /// Bihomogeneous of bidegree (delta, d) on X0..Xn, u0..un.
  MultiPoly bihomogeneous(const VarTablePtr& vars, int delta, int d, int max_terms,
                          int coeff_range = 4);
  PolyMatrix matrix(const VarTablePtr& vars, std::size_t size, int max_degree, int max_terms);
  std::vector<Rational> point(std::size_t size, int range);

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace weave::check
