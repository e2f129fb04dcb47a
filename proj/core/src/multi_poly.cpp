#include "weave/multi_poly.hpp"

#include <numeric>
#include <sstream>

#include "weave/errors.hpp"

namespace weave {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int grevlex_compare(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (!same_table(a.vars(), b.vars())) {
    throw UsageError("polynomials over different variable tables");
  }
}

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("polynomial needs a variable table");
}

MultiPoly MultiPoly::constant(VarTablePtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::size_t index) {
  if (index >= vars->size()) throw UsageError("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::string_view name) {
  const std::size_t i = vars->index(name);
  return variable(std::move(vars), i);
}

MultiPoly MultiPoly::monomial(VarTablePtr vars, Exponents e, const Rational& c) {
  if (e.size() != vars->size()) throw UsageError("exponent vector has wrong length");
  for (int k : e) {
    if (k < 0) throw UsageError("negative exponent");
  }
  MultiPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && weave::total_degree(terms_.begin()->first) == 0;
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Grevlex is degree-compatible, so the first term has maximal degree.
  return weave::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= vars_->size()) throw UsageError("variable index out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  require_same_vars(*this, other);
  MultiPoly out(vars_);
  Exponents e(vars_->size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::mul_term(const Exponents& e, const Rational& c) const {
  MultiPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [ea, ca] : terms_) {
    Exponents s(ea);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += e[k];
    out.terms_.emplace_hint(out.terms_.end(), std::move(s), ca * c);
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return same_table(vars_, other.vars_) && terms_ == other.terms_;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw UsageError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    }
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = weave::total_degree(e) == 0;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << weave::to_string(mag);
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << vars_->name(k);
      if (e[k] > 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a);
  out *= b;
  return out;
}
MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

}  // namespace weave
