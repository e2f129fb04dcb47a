#pragma once

#include <cstddef>
#include <vector>

#include "weave/multi_poly.hpp"

namespace weave {

enum class OrderKind { Grevlex, Lex, Block };

/// A multiplicative total order on exponent vectors. Block orders compare the
/// eliminated variables first (grevlex on that group), then the rest (grevlex).
class MonomialOrder {
 public:
  static MonomialOrder grevlex();
  static MonomialOrder lex();
  /// `eliminated` lists variable indices; `nvars` is the table size.
  static MonomialOrder block(std::vector<std::size_t> eliminated, std::size_t nvars);

  OrderKind kind() const { return kind_; }
  /// Per-variable flag, empty unless kind() == Block.
  const std::vector<bool>& eliminated() const { return eliminated_; }

  /// Three-way compare: <0, 0, >0.
  int compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& other) const = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<bool> eliminated)
      : kind_(kind), eliminated_(std::move(eliminated)) {}

  OrderKind kind_;
  std::vector<bool> eliminated_;
};

/// Leading exponents of a nonzero f under `order`.
Exponents leading_exponents(const MultiPoly& f, const MonomialOrder& order);
Rational leading_coefficient(const MultiPoly& f, const MonomialOrder& order);

}  // namespace weave
