#include "weave/rational_function.hpp"

#include "weave/errors.hpp"
#include "weave/poly_ops.hpp"

namespace weave {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_vars(num_, den_);
  if (den_.is_zero()) throw UsageError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), 1);
    return;
  }
  const MultiPoly g = multivar_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const MultiPoly pd = primitive_part(den_);
  const Rational scale = pd.leading_coefficient() / den_.leading_coefficient();
  num_ *= scale;
  den_ = pd;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw UsageError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k >= 0) {
    return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }
  if (is_zero()) throw UsageError("negative power of zero");
  return RationalFunction(den_.pow(static_cast<unsigned>(-k)), num_.pow(static_cast<unsigned>(-k)));
}

bool RationalFunction::operator==(const RationalFunction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw UsageError("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  return RationalFunction(partial_derivative(num_, var) * den_ - num_ * partial_derivative(den_, var),
                          den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return (num_ * (1 / den_.leading_coefficient())).to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace weave
