#include "weave/ideal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "weave/errors.hpp"
#include "weave/poly_ops.hpp"

namespace weave {

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Exponents& a, const Exponents& b) const { return order->greater(a, b); }
};

/// Polynomial with terms sorted by the working order, leading term first.
using OrderedTerms = std::map<Exponents, Rational, OrderGreater>;

struct Working {
  OrderedTerms terms;
  explicit Working(const MonomialOrder& order) : terms(OrderGreater{&order}) {}

  bool is_zero() const { return terms.empty(); }
  const Exponents& lm() const { return terms.begin()->first; }
  const Rational& lc() const { return terms.begin()->second; }
};

Working to_working(const MultiPoly& f, const MonomialOrder& order) {
  Working w(order);
  for (const auto& [e, c] : f.terms()) w.terms.emplace(e, c);
  return w;
}

MultiPoly to_poly(const Working& w, const VarTablePtr& vars) {
  MultiPoly f(vars);
  for (const auto& [e, c] : w.terms) f.add_term(e, c);
  return f;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > 0 && b[k] > 0) return false;
  }
  return true;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents q(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) q[k] = a[k] - b[k];
  return q;
}

/// p -= c * x^shift * g
void subtract_multiple(OrderedTerms& p, const Working& g, const Exponents& shift,
                       const Rational& c) {
  for (const auto& [e, gc] : g.terms) {
    Exponents m(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) m[k] = e[k] + shift[k];
    auto it = p.find(m);
    if (it == p.end()) {
      p.emplace(std::move(m), -c * gc);
    } else {
      it->second -= c * gc;
      if (it->second == 0) p.erase(it);
    }
  }
}

/// Full reduction of f by the divisors (all nonzero).
Working reduce(Working p, const std::vector<const Working*>& divisors, const MonomialOrder& order) {
  Working r(order);
  while (!p.is_zero()) {
    const Exponents lm = p.lm();
    const Rational lc = p.lc();
    const Working* hit = nullptr;
    for (const Working* g : divisors) {
      if (divides(g->lm(), lm)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      subtract_multiple(p.terms, *hit, quotient(lm, hit->lm()), lc / hit->lc());
    } else {
      r.terms.emplace_hint(r.terms.end(), lm, lc);
      p.terms.erase(p.terms.begin());
    }
  }
  return r;
}

/// Scale to integer coefficients with content 1 and positive leading coefficient.
void make_primitive(Working& w) {
  if (w.is_zero()) return;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : w.terms) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (w.lc() < 0) scale = -scale;
  for (auto& [e, c] : w.terms) c *= scale;
}

void make_monic(Working& w) {
  if (w.is_zero()) return;
  const Rational inv = 1 / w.lc();
  for (auto& [e, c] : w.terms) c *= inv;
}

Working spoly(const Working& f, const Working& g, const MonomialOrder& order) {
  const Exponents m = lcm(f.lm(), g.lm());
  Working s(order);
  subtract_multiple(s.terms, f, quotient(m, f.lm()), -1 / f.lc());
  subtract_multiple(s.terms, g, quotient(m, g.lm()), 1 / g.lc());
  return s;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
  int degree;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const IdealOptions& options)
      : order_(order), options_(options) {}

  /// Returns false when the unit ideal was detected.
  bool run(const std::vector<Working>& inputs) {
    for (const Working& f : inputs) {
      Working h = reduce(f, active_divisors(), order_);
      if (h.is_zero()) continue;
      if (!add(std::move(h))) return false;
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
      });
      const Pair pair = *best;
      pairs_.erase(best);
      if (++reductions_ > options_.pair_cap) {
        throw CapExceeded("Groebner basis computation exceeded the pair-reduction cap of " +
                          std::to_string(options_.pair_cap));
      }
      Working h = reduce(spoly(polys_[pair.i], polys_[pair.j], order_), active_divisors(), order_);
      if (h.is_zero()) continue;
      if (!add(std::move(h))) return false;
    }
    return true;
  }

  std::vector<Working> active() const {
    std::vector<Working> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(polys_[k]);
    }
    return out;
  }

 private:
  std::vector<const Working*> active_divisors() const {
    std::vector<const Working*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  /// Gebauer-Moeller update with the new element h. False on a unit.
  bool add(Working h) {
    make_primitive(h);
    if (h.lm() == Exponents(h.lm().size(), 0)) return false;
    const std::size_t hi = polys_.size();
    const Exponents& lh = h.lm();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const Exponents m = lcm(polys_[g].lm(), lh);
      candidates.push_back({g, hi, m, total_degree(m)});
    }
    // Chain criterion among the new pairs: keep (g,h) if its leading monomials
    // are coprime or no other new pair has an lcm dividing its lcm.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      if (coprime(polys_[p.i].lm(), lh)) {
        kept.push_back(p);
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        const Pair& q = candidates[b];
        if (!divides(q.lcm, p.lcm)) continue;
        // Among equal lcms only the first candidate survives.
        if (q.lcm == p.lcm && b > a) continue;
        dominated = true;
      }
      if (!dominated) kept.push_back(p);
    }
    // Product criterion: drop pairs with coprime leading monomials.
    std::vector<Pair> fresh;
    for (const Pair& p : kept) {
      if (!coprime(polys_[p.i].lm(), lh)) fresh.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (const Pair& p : pairs_) {
      const bool redundant = divides(lh, p.lcm) && lcm(polys_[p.i].lm(), lh) != p.lcm &&
                             lcm(polys_[p.j].lm(), lh) != p.lcm;
      if (!redundant) old.push_back(p);
    }
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && divides(lh, polys_[g].lm())) active_[g] = false;
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
    polys_.push_back(std::move(h));
    active_.push_back(true);
    return true;
  }

  const MonomialOrder& order_;
  const IdealOptions& options_;
  std::vector<Working> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t reductions_ = 0;
};

void check_vars(std::span<const MultiPoly> gens, const VarTablePtr& vars) {
  for (const MultiPoly& g : gens) {
    if (!same_table(g.vars(), vars)) throw UsageError("ideal generators over different variable tables");
  }
}

}  // namespace

IdealBasis::IdealBasis(VarTablePtr vars, std::vector<MultiPoly> generators, MonomialOrder order,
                       bool reduced)
    : vars_(std::move(vars)),
      generators_(std::move(generators)),
      order_(std::move(order)),
      reduced_(reduced) {
  check_vars(generators_, vars_);
  std::erase_if(generators_, [](const MultiPoly& g) { return g.is_zero(); });
}

bool IdealBasis::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_constant();
}

MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis) {
  if (!same_table(f.vars(), basis.vars())) throw UsageError("normal_form: variable table mismatch");
  const MonomialOrder& order = basis.order();
  std::vector<Working> ws;
  ws.reserve(basis.generators().size());
  for (const MultiPoly& g : basis.generators()) ws.push_back(to_working(g, order));
  std::vector<const Working*> divisors;
  for (const Working& w : ws) divisors.push_back(&w);
  return to_poly(reduce(to_working(f, order), divisors, order), f.vars());
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  require_same_vars(f, g);
  if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of the zero polynomial");
  return to_poly(spoly(to_working(f, order), to_working(g, order), order), f.vars());
}

IdealBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order,
                      const IdealOptions& options) {
  if (gens.empty()) throw UsageError("buchberger needs at least one generator");
  const VarTablePtr& vars = gens.front().vars();
  check_vars(gens, vars);

  std::vector<Working> inputs;
  for (const MultiPoly& g : gens) {
    if (g.is_zero()) continue;
    Working w = to_working(g, order);
    make_primitive(w);
    inputs.push_back(std::move(w));
  }
  if (inputs.empty()) return IdealBasis(vars, {}, order, true);

  Engine engine(order, options);
  if (!engine.run(inputs)) {
    return IdealBasis(vars, {MultiPoly::constant(vars, 1)}, order, true);
  }

  std::vector<Working> g = engine.active();
  // Minimal: no leading monomial divides another's.
  std::vector<Working> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !divides(g[b].lm(), g[a].lm())) continue;
      redundant = g[b].lm() != g[a].lm() || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  // Interreduce; leading monomials are unchanged so the others stay valid divisors.
  std::vector<Working> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Working*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(&minimal[b]);
    }
    Working head(order);
    head.terms.emplace(minimal[a].lm(), minimal[a].lc());
    Working tail = minimal[a];
    tail.terms.erase(tail.terms.begin());
    Working r = reduce(std::move(tail), others, order);
    for (auto& [e, c] : r.terms) head.terms.emplace(e, c);
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Working& a, const Working& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });
  std::vector<MultiPoly> out;
  for (const Working& w : reduced) out.push_back(to_poly(w, vars));
  return IdealBasis(vars, std::move(out), order, true);
}

bool ideal_member(const MultiPoly& f, std::span<const MultiPoly> gens, const IdealOptions& options) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  return normal_form(f, buchberger(gens, MonomialOrder::grevlex(), options)).is_zero();
}

bool is_trivial_ideal(std::span<const MultiPoly> gens, const IdealOptions& options) {
  if (gens.empty()) return false;
  return buchberger(gens, MonomialOrder::grevlex(), options).is_unit();
}

std::vector<MultiPoly> eliminate(std::span<const MultiPoly> gens,
                                 const std::vector<std::size_t>& drop,
                                 const IdealOptions& options) {
  if (gens.empty()) return {};
  const std::size_t nvars = gens.front().vars()->size();
  const IdealBasis basis = buchberger(gens, MonomialOrder::block(drop, nvars), options);
  std::vector<MultiPoly> out;
  for (const MultiPoly& g : basis.generators()) {
    const bool free = std::none_of(drop.begin(), drop.end(),
                                   [&](std::size_t v) { return g.depends_on(v); });
    if (free) out.push_back(g);
  }
  return out;
}

std::vector<MultiPoly> eliminate(std::span<const MultiPoly> gens, VarGroup drop,
                                 const IdealOptions& options) {
  if (gens.empty()) return {};
  return eliminate(gens, gens.front().vars()->members(drop), options);
}

}  // namespace weave
