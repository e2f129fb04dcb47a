#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weave/multi_poly.hpp"
#include "weave/poly_ops.hpp"
#include "weave/rational_function.hpp"

namespace weave {

/// Standard chart of the incidence variety: X_i != 0 and u_j != 0.
///
/// Chart coordinates are x_1..x_n and p_1..p_{n-1}. The homogeneous indices
/// other than i and j, in increasing order, give x_1..x_{n-1} and p_1..p_{n-1};
/// index j gives x_n.
struct Chart {
  int i = 0;
  int j = 0;

  /// Homogeneous index of x_{k+1}, k = 0..n-1.
  std::vector<int> x_indices(int n) const;
  /// Homogeneous index of p_{k+1}, k = 0..n-2.
  std::vector<int> p_indices(int n) const;
  std::string label() const;

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Throws UsageError unless 0 <= i, j <= n and i != j.
void validate_chart(const Chart& c, int n);

/// All n(n+1) charts ordered by (i, j).
std::vector<Chart> standard_atlas(int n);

/// Sum of u_r X_r over the bihomogeneous table.
MultiPoly incidence_form(const VarTablePtr& bihomogeneous_vars);

/// Representative of H modulo the incidence form with no monomial divisible
/// by u_0 X_0 (normal form under an order eliminating u_0).
MultiPoly reduce_mod_incidence(const MultiPoly& h);

/// A validated bihomogeneous PDE on P_n.
class BiHomogPde {
 public:
  /// Throws InputError when H is zero, not bihomogeneous, of u-degree 0, or
  /// divisible by the incidence form. H must live over VarTable::bihomogeneous(n).
  explicit BiHomogPde(MultiPoly h);

  int n() const { return h_.vars()->n(); }
  const MultiPoly& H() const { return h_; }
  Bidegree bidegree() const { return bidegree_; }

  friend bool operator==(const BiHomogPde& a, const BiHomogPde& b) { return a.h_ == b.h_; }

 private:
  MultiPoly h_;
  Bidegree bidegree_;
};

/// Local form F(x, p) of a PDE in one chart.
struct ChartForm {
  Chart chart;
  int n = 0;
  MultiPoly F;
  /// The global PDE this form was computed from, if any.
  std::optional<BiHomogPde> source;
  /// Target bidegree for rehomogenize() when no source is known.
  std::optional<Bidegree> declared;
};

/// X_i = 1, X_lambda = x, u_j = -1, u_alpha = p_alpha and u_i solved from the
/// incidence relation.
ChartForm chart_form(const BiHomogPde& s, const Chart& c);

/// The same restriction for any polynomial over the bihomogeneous table.
MultiPoly restrict_to_chart(const MultiPoly& h, const Chart& c);

/// Wraps a locally given F (over VarTable::chart(n)).
ChartForm raw_chart_form(int n, const Chart& c, MultiPoly f,
                         std::optional<Bidegree> declared = std::nullopt);

/// The H of minimal bidegree (or of the declared bidegree) with chart form
/// exactly F, reduced modulo the incidence form. Throws InputError when no
/// such H exists.
BiHomogPde rehomogenize(const ChartForm& f);

/// Change of chart c1 -> c2, all maps expressed in the coordinates of c1.
struct ChartTransition {
  Chart from;
  Chart to;
  int n = 0;
  VarTablePtr vars;
  /// x'_k as functions of (x, p).
  std::vector<RationalFunction> x_map;
  /// p'_k from the adjugate formula.
  std::vector<RationalFunction> p_map;
  /// J[a][b] = d x'_a / d x_b.
  std::vector<std::vector<RationalFunction>> J;
  /// K = det(J) J^{-1}, so J K = det(J) I.
  std::vector<std::vector<RationalFunction>> K;
  RationalFunction delta_M;
  RationalFunction delta_T;
};

ChartTransition transition(const Chart& c1, const Chart& c2, int n);

/// Jacobian data and contact-element map for an arbitrary change of base
/// coordinates x' = x_map(x) over VarTable::chart(n). Charts are left at (0, n).
ChartTransition coordinate_change(int n, std::vector<RationalFunction> x_map);

/// (x', p') at a point (x, p) of c1. Throws UsageError outside the overlap.
std::vector<Rational> transport_point(const ChartTransition& t, std::span<const Rational> point);

struct TransportedForm {
  MultiPoly F;        ///< cleared * (F' o transition)
  MultiPoly cleared;  ///< product of the substituted denominators
};

/// Pulls a form written in c2 coordinates back to c1 coordinates.
TransportedForm transport_form(const ChartTransition& t, const MultiPoly& f_to);

struct CovarianceResult {
  bool holds = false;
  /// (F' o transition) / F.
  std::optional<RationalFunction> ratio;
  /// ratio * (delta_T / delta_M)^d, the unit of the covariance law.
  std::optional<RationalFunction> rho;
};

/// F' o transition must equal F times a nonzero constant and integer powers of
/// delta_M, delta_T and the overlap denominators, with rho depending on x only.
CovarianceResult covariance_details(const ChartForm& f1, const ChartForm& f2, int d);
bool covariance_check(const BiHomogPde& s, const Chart& c1, const Chart& c2);
bool covariance_check(const ChartForm& f1, const ChartForm& f2, int d);

/// H'(X'; u') = H(u'; X'). Throws UsageError when delta = 0.
BiHomogPde dual_pde(const BiHomogPde& s);

bool is_algebraic_pde(const BiHomogPde& s);

}  // namespace weave
