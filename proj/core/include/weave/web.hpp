#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weave/cohomology.hpp"
#include "weave/contact.hpp"
#include "weave/ideal.hpp"
#include "weave/poly_matrix.hpp"

namespace weave {

/// Codimension-one complete-intersection web: n - 1 global PDEs on P_n.
class CiWeb {
 public:
  /// Throws InputError unless there are exactly n - 1 PDEs, all on P_n.
  CiWeb(int n, std::vector<BiHomogPde> pdes, bool asserted_irreducible = false,
        bool asserted_quasi_smooth = false);

  int n() const { return n_; }
  const std::vector<BiHomogPde>& pdes() const { return pdes_; }
  bool asserted_irreducible() const { return asserted_irreducible_; }
  bool asserted_quasi_smooth() const { return asserted_quasi_smooth_; }

  MultiDegreeData multidegree_data() const;

 private:
  int n_;
  std::vector<BiHomogPde> pdes_;
  bool asserted_irreducible_;
  bool asserted_quasi_smooth_;
};

Integer weight(const CiWeb& w);
std::vector<int> multidegree(const CiWeb& w);
/// Product of the delta_a.
Integer web_degree(const CiWeb& w);

/// Chart-local data of a web.
struct ChartWebData {
  Chart chart;
  int n = 0;
  std::vector<MultiPoly> F;
  /// d F_g / d p_b, row g, column b.
  PolyMatrix jac_p;
  MultiPoly delta_p;
  /// d F_g / d x_a + p_a d F_g / d x_n, row g, column a.
  PolyMatrix theta;
  /// adj(jac_p).
  PolyMatrix L;
  /// L * theta.
  PolyMatrix L_theta;
  /// delta_p identically zero: the chart carries no covering data.
  bool degenerate = false;
  /// Reduced basis of (F_1..F_{n-1}, delta_p).
  IdealBasis critical_ideal;
};

ChartWebData chart_web_data(const CiWeb& w, const Chart& c, const IdealOptions& options = {});
/// From chart forms given directly over VarTable::chart(n).
ChartWebData chart_web_data(int n, const Chart& c, std::vector<MultiPoly> forms,
                            const IdealOptions& options = {});

struct ChartVerdict {
  Chart chart;
  bool degenerate = false;
  bool holds = false;
  /// Hyper-dicriticity only: theta lies in (F_1..F_{n-1}).
  std::optional<bool> vanishes_on_web;
  /// Matrix entries "(row,col)" or forms that fail the test.
  std::vector<std::string> failures;
};

struct WebVerdict {
  bool holds = false;
  std::vector<ChartVerdict> charts;
  /// Set for hyper-dicriticity: theta vanishes on all of W in every chart.
  std::optional<bool> vanishes_on_web;
};

/// `charts` empty means the full standard atlas.
WebVerdict is_dicritical(const CiWeb& w, const std::vector<Chart>& charts = {},
                         const IdealOptions& options = {});
WebVerdict is_hyperdicritical(const CiWeb& w, const std::vector<Chart>& charts = {},
                              const IdealOptions& options = {});
/// Chart-data versions for raw chart forms.
ChartVerdict dicritical_in_chart(const ChartWebData& data, const IdealOptions& options = {});
ChartVerdict hyperdicritical_in_chart(const ChartWebData& data, const IdealOptions& options = {});

/// Co-critical set is all of S: every d F/d x_a + p_a d F/d x_n is a multiple of F.
WebVerdict is_linearizable_pde(const BiHomogPde& s, const std::vector<Chart>& charts = {});
bool linearizable_in_chart(const MultiPoly& f, int n);

bool is_algebraic_web(const CiWeb& w);

/// No singular point of W in the chart: (F, all maximal minors of the full
/// Jacobian) is the unit ideal.
WebVerdict smoothness_chart_check(const CiWeb& w, const std::vector<Chart>& charts = {},
                                  const IdealOptions& options = {});
bool smooth_in_chart(const std::vector<MultiPoly>& forms, int n, const IdealOptions& options = {});

/// Generators of the projection of the critical scheme: p eliminated from
/// (F_1..F_{n-1}, delta_p).
std::vector<MultiPoly> caustic_generators(const CiWeb& w, const Chart& c,
                                          const IdealOptions& options = {});
std::vector<MultiPoly> caustic_generators(const ChartWebData& data, const IdealOptions& options = {});

/// Heuristic input checks: non-square-free chart forms and A_I(x) coefficients
/// with a common factor.
std::vector<std::string> web_warnings(const CiWeb& w, const std::vector<Chart>& charts = {});
std::vector<std::string> pde_warnings(const BiHomogPde& s, const std::vector<Chart>& charts = {});

struct Certificate {
  Integer weight;
  std::vector<int> multidegree;
  Integer degree;
  WebVerdict smooth;
  WebVerdict dicritical;
  bool algebraic = false;
  /// Weight >= 3, smooth (or asserted quasi-smooth) and dicritical.
  bool hypotheses_met = false;
  /// Hypotheses met but some delta_a > 0.
  bool contradiction = false;
  Rational script_N;
  Integer bott_number;
  /// bott_number == weight * script_N.
  bool bott_relation = false;
  CausticCertificate caustic;
  std::vector<std::string> warnings;
};

Certificate certify(const CiWeb& w, const std::vector<Chart>& charts = {},
                    const IdealOptions& options = {});

}  // namespace weave
