#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weave/monomial_order.hpp"
#include "weave/multi_poly.hpp"

namespace weave {

struct IdealOptions {
  /// Maximum number of S-polynomial reductions before CapExceeded is thrown.
  std::size_t pair_cap = 10000;
};

/// Generators with their monomial order. Bases produced by buchberger() are
/// reduced: monic, minimal, interreduced, sorted by increasing leading monomial.
class IdealBasis {
 public:
  IdealBasis(VarTablePtr vars, std::vector<MultiPoly> generators, MonomialOrder order,
             bool reduced);

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }

  bool is_zero_ideal() const { return generators_.empty(); }
  /// True when the basis is {1}.
  bool is_unit() const;

 private:
  VarTablePtr vars_;
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
  bool reduced_;
};

/// Remainder of full multivariate division by the basis generators, in order.
MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/// Reduced Groebner basis. Zero generators are ignored; an empty or all-zero
/// input yields the zero ideal (no generators). `gens` must be nonempty so the
/// variable table is known.
IdealBasis buchberger(std::span<const MultiPoly> gens,
                      const MonomialOrder& order = MonomialOrder::grevlex(),
                      const IdealOptions& options = {});

bool ideal_member(const MultiPoly& f, std::span<const MultiPoly> gens,
                  const IdealOptions& options = {});

bool is_trivial_ideal(std::span<const MultiPoly> gens, const IdealOptions& options = {});

/// Generators of the elimination ideal: the reduced basis under a block order
/// eliminating `drop`, restricted to the elements free of dropped variables.
std::vector<MultiPoly> eliminate(std::span<const MultiPoly> gens,
                                 const std::vector<std::size_t>& drop,
                                 const IdealOptions& options = {});
std::vector<MultiPoly> eliminate(std::span<const MultiPoly> gens, VarGroup drop,
                                 const IdealOptions& options = {});

}  // namespace weave
