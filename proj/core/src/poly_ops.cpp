#include "weave/poly_ops.hpp"

#include <algorithm>

#include "weave/errors.hpp"
#include "weave/poly_matrix.hpp"

namespace weave {

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.vars()->size()) throw UsageError("unknown variable index");
  MultiPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d(e);
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& f, std::string_view var) {
  return partial_derivative(f, f.vars()->index(var));
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(VarTablePtr source, VarTablePtr target)
    : source_(std::move(source)), target_(std::move(target)) {}

Substitution& Substitution::set(std::size_t var, MultiPoly num, MultiPoly den) {
  if (var >= source_->size()) throw UsageError("substitution variable out of range");
  if (!same_table(num.vars(), target_) || !same_table(den.vars(), target_)) {
    throw UsageError("substitution image not over the target table");
  }
  if (den.is_zero()) throw UsageError("substitution with zero denominator");
  images_.insert_or_assign(var, std::pair{std::move(num), std::move(den)});
  return *this;
}

Substitution& Substitution::set(std::size_t var, MultiPoly num) {
  MultiPoly one = MultiPoly::constant(target_, 1);
  return set(var, std::move(num), std::move(one));
}

Substitution& Substitution::set(std::string_view var, MultiPoly num, MultiPoly den) {
  return set(source_->index(var), std::move(num), std::move(den));
}

Substitution& Substitution::set(std::string_view var, MultiPoly num) {
  return set(source_->index(var), std::move(num));
}

std::pair<MultiPoly, MultiPoly> Substitution::image(std::size_t var) const {
  if (auto it = images_.find(var); it != images_.end()) return it->second;
  auto t = target_->find(source_->name(var));
  if (!t) {
    throw UsageError("no image for variable '" + source_->name(var) + "'");
  }
  return {MultiPoly::variable(target_, *t), MultiPoly::constant(target_, 1)};
}

SubstitutionResult substitute(const MultiPoly& f, const Substitution& map) {
  if (!same_table(f.vars(), map.source())) {
    throw UsageError("substitution source table does not match polynomial");
  }
  const std::size_t nv = f.vars()->size();
  std::vector<int> deg(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) deg[v] = std::max(0, f.degree_in(v));

  std::vector<std::vector<MultiPoly>> num_pow(nv), den_pow(nv);
  MultiPoly cleared = MultiPoly::constant(map.target(), 1);
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] == 0) continue;
    auto [num, den] = map.image(v);
    num_pow[v].push_back(MultiPoly::constant(map.target(), 1));
    den_pow[v].push_back(MultiPoly::constant(map.target(), 1));
    for (int k = 1; k <= deg[v]; ++k) {
      num_pow[v].push_back(num_pow[v].back() * num);
      den_pow[v].push_back(den_pow[v].back() * den);
    }
    cleared *= den_pow[v][deg[v]];
  }

  MultiPoly result(map.target());
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(map.target(), c);
    for (std::size_t v = 0; v < nv; ++v) {
      if (deg[v] == 0) continue;
      t *= num_pow[v][e[v]];
      t *= den_pow[v][deg[v] - e[v]];
    }
    result += t;
  }
  return {std::move(result), std::move(cleared)};
}

// ---------------------------------------------------------------------------
// Degrees

int group_degree(const MultiPoly& f, VarGroup group) {
  const auto idx = f.vars()->members(group);
  int best = f.is_zero() ? -1 : 0;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (auto i : idx) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

std::optional<Bidegree> bidegree_of(const MultiPoly& f) {
  if (f.is_zero()) throw UsageError("bi-degree of the zero polynomial is undefined");
  const auto xs = f.vars()->members(VarGroup::X);
  const auto us = f.vars()->members(VarGroup::U);
  std::optional<Bidegree> seen;
  for (const auto& [e, c] : f.terms()) {
    Bidegree b;
    for (auto i : xs) b.x += e[i];
    for (auto i : us) b.u += e[i];
    if (seen && !(*seen == b)) return std::nullopt;
    seen = b;
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Division

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  MultiPoly rem = a;
  MultiPoly quot(a.vars());
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents shift(lb.size());
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    for (std::size_t k = 0; k < lr.size(); ++k) {
      shift[k] = lr[k] - lb[k];
      if (shift[k] < 0) return std::nullopt;
    }
    const Rational q = rem.leading_coefficient() / cb;
    quot.add_term(shift, q);
    rem -= b.mul_term(shift, q);
  }
  return quot;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var) {
  const int d = f.degree_in(var);
  std::vector<MultiPoly> out;
  if (d < 0) return out;
  out.assign(static_cast<std::size_t>(d) + 1, MultiPoly(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    Exponents r(e);
    r[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(r, c);
  }
  return out;
}

MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var) {
  if (coeffs.empty()) throw UsageError("empty coefficient list");
  MultiPoly out(coeffs.front().vars());
  Exponents shift(out.vars()->size(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    shift[var] = static_cast<int>(k);
    out += coeffs[k].mul_term(shift, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resultant

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  require_same_vars(f, g);
  if (var >= f.vars()->size()) throw UsageError("unknown variable index");
  if (f.is_zero() && g.is_zero()) throw UsageError("resultant of two zero polynomials");
  const int m = f.degree_in(var);
  const int k = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.vars());
  if (m == 0) return f.pow(static_cast<unsigned>(k));
  if (k == 0) return g.pow(static_cast<unsigned>(m));

  const auto fc = coefficients_in(f, var);
  const auto gc = coefficients_in(g, var);
  const std::size_t size = static_cast<std::size_t>(m + k);
  PolyMatrix s(f.vars(), size, size);
  // k shifted rows of f, then m shifted rows of g; coefficients in
  // descending powers of var.
  for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) {
    for (int i = m; i >= 0; --i) s(r, r + static_cast<std::size_t>(m - i)) = fc[i];
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    for (int i = k; i >= 0; --i) {
      s(static_cast<std::size_t>(k) + r, r + static_cast<std::size_t>(k - i)) = gc[i];
    }
  }
  return poly_det(s);
}

// ---------------------------------------------------------------------------
// GCD

MultiPoly primitive_part(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_coefficient() < 0) scale = -scale;
  return f * scale;
}

namespace {

// Lowest-index variable occurring in a or b.
std::optional<std::size_t> main_variable(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t nv = a.vars()->size();
  for (std::size_t v = 0; v < nv; ++v) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly g(f.vars());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in var: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const auto bc = coefficients_in(b, var);
  const MultiPoly& lc = bc.back();
  MultiPoly r = a;
  int times = a.degree_in(var) - db + 1;
  Exponents shift(a.vars()->size(), 0);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    const MultiPoly lr = coefficients_in(r, var).back();
    shift[var] = dr - db;
    r = lc * r - lr * b.mul_term(shift, 1);
    --times;
  }
  if (times > 0) r *= lc.pow(static_cast<unsigned>(times));
  return r;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
  const auto v = main_variable(a, b);
  if (!v) return MultiPoly::constant(a.vars(), 1);

  const MultiPoly ca = content_in(a, *v);
  const MultiPoly cb = content_in(b, *v);
  const MultiPoly c = gcd_impl(ca, cb);
  if (!a.depends_on(*v) || !b.depends_on(*v)) return primitive_part(c);

  MultiPoly pa = *divide_exact(a, ca);
  MultiPoly pb = *divide_exact(b, cb);
  if (pa.degree_in(*v) < pb.degree_in(*v)) std::swap(pa, pb);
  // Primitive polynomial remainder sequence.
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, *v);
    if (r.is_zero()) break;
    if (r.degree_in(*v) == 0) {
      pb = MultiPoly::constant(a.vars(), 1);
      break;
    }
    pa = std::move(pb);
    pb = *divide_exact(r, content_in(r, *v));
  }
  return primitive_part(c * pb);
}

}  // namespace

MultiPoly multivar_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  if (a.is_zero() && b.is_zero()) throw UsageError("gcd of zero polynomials");
  return gcd_impl(a, b);
}

MultiPoly multivar_gcd(std::span<const MultiPoly> fs) {
  if (fs.empty()) throw UsageError("gcd of an empty list");
  MultiPoly g(fs.front().vars());
  for (const auto& f : fs) {
    require_same_vars(g, f);
    if (f.is_zero()) continue;
    g = g.is_zero() ? primitive_part(f) : gcd_impl(g, f);
  }
  if (g.is_zero()) throw UsageError("gcd of zero polynomials");
  return g;
}

}  // namespace weave
