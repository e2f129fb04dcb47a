#include "weave/monomial_order.hpp"

#include "weave/errors.hpp"

namespace weave {

namespace {

/// grevlex restricted to the variables where mask[k] == want.
int masked_grevlex(const Exponents& a, const Exponents& b, const std::vector<bool>& mask,
                   bool want) {
  int da = 0;
  int db = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (mask[k] != want) continue;
    da += a[k];
    db += b[k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (mask[k] != want || a[k] == b[k]) continue;
    return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(OrderKind::Grevlex, {}); }

MonomialOrder MonomialOrder::lex() { return MonomialOrder(OrderKind::Lex, {}); }

MonomialOrder MonomialOrder::block(std::vector<std::size_t> eliminated, std::size_t nvars) {
  std::vector<bool> mask(nvars, false);
  for (std::size_t v : eliminated) {
    if (v >= nvars) throw UsageError("block order: variable index out of range");
    mask[v] = true;
  }
  return MonomialOrder(OrderKind::Block, std::move(mask));
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind_) {
    case OrderKind::Grevlex:
      return grevlex_compare(a, b);
    case OrderKind::Lex:
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      }
      return 0;
    case OrderKind::Block: {
      if (eliminated_.size() != a.size()) throw UsageError("block order size mismatch");
      const int first = masked_grevlex(a, b, eliminated_, true);
      if (first != 0) return first;
      return masked_grevlex(a, b, eliminated_, false);
    }
  }
  return 0;
}

Exponents leading_exponents(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw UsageError("leading term of the zero polynomial");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || order.greater(e, *best)) best = &e;
  }
  return *best;
}

Rational leading_coefficient(const MultiPoly& f, const MonomialOrder& order) {
  return f.coefficient(leading_exponents(f, order));
}

}  // namespace weave
