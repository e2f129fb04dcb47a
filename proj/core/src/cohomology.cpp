#include "weave/cohomology.hpp"

#include <stdexcept>

#include "weave/errors.hpp"

namespace weave {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void require_compatible(const CohomClass& a, const CohomClass& b) {
  if (a.n() != b.n() || a.ring() != b.ring()) throw UsageError("cohomology classes from different rings");
}

int top_degree(int n, CohomRing ring) { return ring == CohomRing::Incidence ? 2 * n - 1 : 2 * n; }

/// a * (xi + xi') ^ k * xi^s, unreduced.
CohomClass xi_sum_power(int n, int k) {
  return (CohomClass::xi(n, CohomRing::Incidence) + CohomClass::xi_prime(n, CohomRing::Incidence)).pow(k);
}

}  // namespace

CohomClass::CohomClass(int n, CohomRing ring) : n_(n), ring_(ring) {
  if (n < 1) throw UsageError("cohomology ring needs n >= 1");
}

CohomClass CohomClass::constant(int n, CohomRing ring, const Integer& c) { return monomial(n, ring, 0, 0, c); }

CohomClass CohomClass::monomial(int n, CohomRing ring, int i, int j, const Integer& c) {
  CohomClass out(n, ring);
  out.add_term(i, j, c);
  return out;
}

Integer CohomClass::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void CohomClass::add_term(int i, int j, const Integer& c) {
  if (i < 0 || j < 0) throw UsageError("negative exponent in cohomology class");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(Monomial{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CohomClass& CohomClass::operator+=(const CohomClass& other) {
  require_compatible(*this, other);
  for (const auto& [m, c] : other.coeffs_) add_term(m.first, m.second, c);
  return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& other) {
  require_compatible(*this, other);
  for (const auto& [m, c] : other.coeffs_) add_term(m.first, m.second, -c);
  return *this;
}

CohomClass& CohomClass::operator*=(const CohomClass& other) {
  require_compatible(*this, other);
  CohomClass out(n_, ring_);
  for (const auto& [ma, ca] : coeffs_) {
    for (const auto& [mb, cb] : other.coeffs_) out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  }
  *this = std::move(out);
  return *this;
}

CohomClass& CohomClass::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, v] : coeffs_) v *= c;
  return *this;
}

CohomClass CohomClass::pow(int k) const {
  if (k < 0) throw UsageError("negative power of a cohomology class");
  CohomClass out = constant(n_, ring_, 1);
  for (int e = 0; e < k; ++e) out *= *this;
  return out;
}

std::string CohomClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  // Highest xi power first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string body;
    auto factor = [&](const char* name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (e > 1) body += "^" + std::to_string(e);
    };
    factor("xi", m.first);
    factor("xi'", m.second);
    if (body.empty()) {
      out += mag.get_str();
    } else {
      out += mag == 1 ? body : mag.get_str() + "*" + body;
    }
  }
  return out;
}

CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
CohomClass operator*(CohomClass a, const CohomClass& b) { return a *= b; }
CohomClass operator*(const Integer& c, CohomClass a) { return a *= c; }

CohomClass nf(const CohomClass& c) {
  const int n = c.n();
  CohomClass out(n, c.ring());
  if (c.ring() == CohomRing::Product) {
    for (const auto& [m, v] : c.coeffs()) {
      if (m.first <= n && m.second <= n) out.add_term(m.first, m.second, v);
    }
    return out;
  }
  // xi'^n -> sum_{k=1}^{n} (-1)^{k+1} xi^k xi'^{n-k}; each step raises the xi exponent.
  std::map<CohomClass::Monomial, Integer> work(c.coeffs());
  while (!work.empty()) {
    auto it = work.begin();
    const auto [i, j] = it->first;
    const Integer v = it->second;
    work.erase(it);
    if (i > n || v == 0) continue;
    if (j < n) {
      out.add_term(i, j, v);
      continue;
    }
    for (int k = 1; k <= n; ++k) {
      if (i + k > n) break;
      const CohomClass::Monomial target{i + k, j - k};
      Integer& slot = work[target];
      slot += k % 2 == 1 ? v : Integer(-v);
      if (slot == 0) work.erase(target);
    }
  }
  return out;
}

Integer integrate(const CohomClass& c) {
  const int top = top_degree(c.n(), c.ring());
  for (const auto& [m, v] : c.coeffs()) {
    if (m.first + m.second != top) {
      throw UsageError("integrate needs a class of top degree " + std::to_string(top));
    }
  }
  const int n = c.n();
  return nf(c).coefficient(n, c.ring() == CohomRing::Incidence ? n - 1 : n);
}

std::vector<CohomClass::Monomial> basis_monomials(int n, CohomRing ring, int k) {
  const int jmax = ring == CohomRing::Incidence ? n - 1 : n;
  std::vector<CohomClass::Monomial> out;
  for (int i = 0; i <= n; ++i) {
    const int j = k - i;
    if (j >= 0 && j <= jmax) out.emplace_back(i, j);
  }
  return out;
}

CohomClass chern_T(int n, int j) {
  if (j < 0 || j > n) throw UsageError("chern_T needs 0 <= j <= n");
  const CohomRing ring = CohomRing::Incidence;
  const CohomClass xi = CohomClass::xi(n, ring);
  const CohomClass sum = xi + CohomClass::xi_prime(n, ring);
  CohomClass rec = CohomClass::constant(n, ring, 1);
  for (int k = 1; k <= j; ++k) rec = binomial(n + 1, k) * xi.pow(k) - sum * rec;
  CohomClass closed(n, ring);
  for (int i = 0; i <= j; ++i) {
    const Integer sign = i % 2 == 0 ? 1 : -1;
    closed += (sign * binomial(n + 1, j - i)) * (xi.pow(j - i) * xi_sum_power(n, i));
  }
  if (rec != closed) throw std::logic_error("Chern class recursion disagrees with the closed form");
  return nf(rec);
}

MultiDegreeData::MultiDegreeData(int n, std::vector<Bidegree> pairs) : n_(n), pairs_(std::move(pairs)) {
  if (n < 2) throw UsageError("multi-degree data needs n >= 2");
  if (pairs_.size() != static_cast<std::size_t>(n - 1)) {
    throw UsageError("multi-degree data needs n - 1 = " + std::to_string(n - 1) + " pairs");
  }
  for (const Bidegree& b : pairs_) {
    if (b.x < 0 || b.u < 1) throw UsageError("multi-degree pairs need delta >= 0 and d >= 1");
  }
}

int MultiDegreeData::delta_bar() const {
  int s = 0;
  for (const auto& b : pairs_) s += b.x;
  return s;
}

int MultiDegreeData::d_bar() const {
  int s = 0;
  for (const auto& b : pairs_) s += b.u;
  return s;
}

Integer MultiDegreeData::weight() const {
  Integer p = 1;
  for (const auto& b : pairs_) p *= b.u;
  return p;
}

Integer MultiDegreeData::degree() const {
  Integer p = 1;
  for (const auto& b : pairs_) p *= b.x;
  return p;
}

Rational MultiDegreeData::sigma1() const {
  Rational s = 0;
  for (const auto& b : pairs_) s += Rational(b.x, b.u);
  s.canonicalize();
  return s;
}

Rational MultiDegreeData::sigma2() const {
  Rational s = 0;
  for (std::size_t a = 0; a < pairs_.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs_.size(); ++b) {
      Rational ra(pairs_[a].x, pairs_[a].u);
      Rational rb(pairs_[b].x, pairs_[b].u);
      ra.canonicalize();
      rb.canonicalize();
      s += ra * rb;
    }
  }
  return s;
}

Rational script_N(const MultiDegreeData& m) {
  const Rational db = m.delta_bar();
  const Rational k = m.n() + 1 - m.d_bar();
  const Rational s1 = m.sigma1();
  const Rational s2 = m.sigma2();
  return db * db - 2 * db * k * (1 + s1) + k * k * (s1 + s2);
}

Integer bott_number(const MultiDegreeData& m) {
  const int n = m.n();
  const CohomRing ring = CohomRing::Incidence;
  const CohomClass xi = CohomClass::xi(n, ring);
  const CohomClass xp = CohomClass::xi_prime(n, ring);
  CohomClass c1 = Integer(n + 1) * xp;
  CohomClass product = CohomClass::constant(n, ring, 1);
  for (const Bidegree& b : m.pairs()) {
    const CohomClass h = Integer(b.x) * xi + Integer(b.u) * xp;
    c1 -= h;
    product = nf(product * h);
  }
  return integrate(nf(nf(c1 * c1) * product * xi.pow(n - 2)));
}

CausticCertificate caustic_certificate(const MultiDegreeData& m) {
  const int n = m.n();
  const CohomRing ring = CohomRing::Product;
  const CohomClass xi = CohomClass::xi(n, ring);
  const CohomClass xp = CohomClass::xi_prime(n, ring);
  CohomClass c = nf((xi + xp).pow(3));
  for (const Bidegree& b : m.pairs()) c = nf(c * (Integer(b.x) * xi + Integer(b.u) * xp));
  CausticCertificate cert;
  cert.all_positive = true;
  for (int i = 2; i <= n; ++i) {
    Integer a = c.coefficient(i, n + 2 - i);
    cert.all_positive = cert.all_positive && a > 0;
    cert.nonzero = cert.nonzero || a != 0;
    cert.coefficients.push_back(std::move(a));
  }
  return cert;
}

}  // namespace weave
