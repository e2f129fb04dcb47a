#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weave/poly_ops.hpp"
#include "weave/rational.hpp"

namespace weave {

/// incidence: Z[xi, xi'] / (xi^{n+1}, xi'^{n+1}, sum_j (-1)^j xi^j xi'^{n-j});
/// product: Z[xi, xi'] / (xi^{n+1}, xi'^{n+1}).
enum class CohomRing { Incidence, Product };

/// Integer combination of monomials xi^i xi'^j. Arithmetic does not reduce;
/// call nf() for the normal form.
class CohomClass {
 public:
  using Monomial = std::pair<int, int>;

  CohomClass(int n, CohomRing ring);

  static CohomClass constant(int n, CohomRing ring, const Integer& c);
  static CohomClass monomial(int n, CohomRing ring, int i, int j, const Integer& c = 1);
  static CohomClass xi(int n, CohomRing ring) { return monomial(n, ring, 1, 0); }
  static CohomClass xi_prime(int n, CohomRing ring) { return monomial(n, ring, 0, 1); }

  int n() const { return n_; }
  CohomRing ring() const { return ring_; }
  const std::map<Monomial, Integer>& coeffs() const { return coeffs_; }
  Integer coefficient(int i, int j) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int i, int j, const Integer& c);

  CohomClass& operator+=(const CohomClass& other);
  CohomClass& operator-=(const CohomClass& other);
  CohomClass& operator*=(const CohomClass& other);
  CohomClass& operator*=(const Integer& c);
  CohomClass pow(int k) const;

  bool operator==(const CohomClass& other) const = default;

  /// "3*xi^2*xi' - xi'^2"; "0" for the zero class.
  std::string to_string() const;

 private:
  int n_;
  CohomRing ring_;
  std::map<Monomial, Integer> coeffs_;
};

CohomClass operator+(CohomClass a, const CohomClass& b);
CohomClass operator-(CohomClass a, const CohomClass& b);
CohomClass operator*(CohomClass a, const CohomClass& b);
CohomClass operator*(const Integer& c, CohomClass a);

CohomClass nf(const CohomClass& c);

/// Coefficient of the top class (xi^n xi'^{n-1}, or xi^n xi'^n for the product
/// ring) in nf(c). Throws UsageError unless every monomial has top degree.
Integer integrate(const CohomClass& c);

/// Normal-form monomials of the incidence ring in (complex) degree k.
std::vector<CohomClass::Monomial> basis_monomials(int n, CohomRing ring, int k);

/// c_j of the tangent bundle of the incidence variety, 0 <= j <= n. The
/// recursion and the closed form are both evaluated and must agree.
CohomClass chern_T(int n, int j);

/// Multi-degree data (delta_a, d_a), a = 1..n-1, of a CI-web.
class MultiDegreeData {
 public:
  /// Throws UsageError unless there are n - 1 pairs with delta >= 0, d >= 1.
  MultiDegreeData(int n, std::vector<Bidegree> pairs);

  int n() const { return n_; }
  const std::vector<Bidegree>& pairs() const { return pairs_; }

  int delta_bar() const;
  int d_bar() const;
  Integer weight() const;
  Integer degree() const;
  Rational sigma1() const;
  /// Sum over a < b.
  Rational sigma2() const;

 private:
  int n_;
  std::vector<Bidegree> pairs_;
};

Rational script_N(const MultiDegreeData& m);

/// Pairing of c_1(N)^2 * prod_a (delta_a xi + d_a xi') * xi^{n-2} on the incidence variety.
Integer bott_number(const MultiDegreeData& m);

struct CausticCertificate {
  /// a_2..a_n.
  std::vector<Integer> coefficients;
  bool all_positive = false;
  bool nonzero = false;
};

/// Coefficients a_i of xi^i xi'^{n+2-i} in (xi + xi')^3 prod_a (delta_a xi + d_a xi')
/// in the product ring.
CausticCertificate caustic_certificate(const MultiDegreeData& m);

}  // namespace weave
