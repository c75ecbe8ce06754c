#include "klsheaf/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "klsheaf/errors.hpp"

namespace klsheaf {

namespace {

// Dense polynomials over Q, constant term first, no trailing zero check
// except where noted.  Only used for field construction, never in hot paths.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division, remainder asserted zero.
Poly poly_divexact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  for (long i = static_cast<long>(num.size()) - static_cast<long>(den.size()); i >= 0; --i) {
    Rational c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

Poly poly_mod(Poly a, const Poly& m) {
  while (a.size() >= m.size()) {
    Rational c = a.back() / m.back();
    size_t off = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[off + j] -= c * m[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<Poly(int)> phi = [&](int k) -> Poly {
    auto hit = cache.find(k);
    if (hit != cache.end()) return hit->second;
    Poly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) num = poly_divexact(std::move(num), phi(d));
    cache[k] = num;
    return num;
  };
  return phi(n);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

FieldSpec::FieldSpec(int conductor, std::vector<Rational> modulus)
    : conductor_(conductor),
      degree_(static_cast<int>(modulus.size()) - 1),
      modulus_(std::move(modulus)) {
  // Powers x^k mod Phi_{2N} for k = 0 .. 2N.  x^{2N} = 1 lands back on the
  // constant, which doubles as a consistency check.
  power_table_.resize(2 * conductor_ + 1);
  Poly cur = {Rational(1)};
  for (int k = 0; k <= 2 * conductor_; ++k) {
    Poly padded = cur;
    padded.resize(degree_, Rational(0));
    power_table_[k] = padded;
    // multiply by x and reduce
    cur.insert(cur.begin(), Rational(0));
    cur = poly_mod(std::move(cur), modulus_);
  }
  if (degree_ > 0) {
    Poly one = {Rational(1)};
    one.resize(degree_, Rational(0));
    if (power_table_[2 * conductor_] != one)
      throw InternalError("root of unity has wrong order in constructed field");
  }
}

FieldSpecPtr FieldSpec::rationals() {
  static FieldSpecPtr q = make(1);
  return q;
}

FieldSpecPtr FieldSpec::make(int conductor) {
  if (conductor < 1) throw ValidationError("field conductor must be positive");
  Poly modulus = cyclotomic(2 * conductor);
  return FieldSpecPtr(new FieldSpec(conductor, std::move(modulus)));
}

FieldElement FieldSpec::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(degree_, Rational(0)));
}

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(long n) const { return from_rational(Rational(n)); }

FieldElement FieldSpec::root_power(long k) const {
  long m = k % (2 * conductor_);
  if (m < 0) m += 2 * conductor_;
  return FieldElement(shared_from_this(), power_table_[m]);
}

FieldElement FieldSpec::two_cos_pi_over(int m) const {
  if (m < 2) throw ValidationError("bond order must be >= 2");
  if (m == 2) return zero();
  if (m == 3) return one();
  if (conductor_ % m != 0)
    throw ValidationError("bond order " + std::to_string(m) + " not supported by conductor " +
                          std::to_string(conductor_));
  long e = conductor_ / m;  // zeta^e = exp(i pi / m)
  FieldElement c = root_power(e) + root_power(-e);
  if (!c.is_real()) throw InternalError("2cos(pi/m) failed the real-subfield check");
  return c;
}

FieldElement FieldSpec::gram_value(int m) const {
  if (m == 0) return from_int(-1);  // limit of -cos(pi/m) as m -> infinity
  return two_cos_pi_over(m) * Rational(-1, 2);
}

void validate_coxeter_matrix(const std::vector<std::vector<int>>& m) {
  size_t r = m.size();
  if (r == 0) throw ValidationError("Coxeter matrix is empty");
  for (size_t i = 0; i < r; ++i) {
    if (m[i].size() != r) throw ValidationError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw ValidationError("Coxeter matrix diagonal must be 1");
    for (size_t j = 0; j < r; ++j) {
      if (i != j) {
        if (m[i][j] == 1 || m[i][j] < 0)
          throw ValidationError("off-diagonal Coxeter matrix entries must be 0 (infinity) or >= 2");
        if (m[i][j] != m[j][i]) throw ValidationError("Coxeter matrix is not symmetric");
      }
    }
  }
}

FieldSpecPtr build_field(const std::vector<std::vector<int>>& m) {
  validate_coxeter_matrix(m);
  long n = 1;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] >= 4) n = std::lcm(n, static_cast<long>(m[i][j]));
  return FieldSpec::make(static_cast<int>(n));
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<Rational> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

void FieldElement::check_compatible(const FieldElement& o) const {
  if (!spec_ || !o.spec_) throw ValidationError("arithmetic on a null field element");
  if (!spec_->same_field(*o.spec_))
    throw ValidationError("field elements belong to different fields (conductors " +
                          std::to_string(spec_->conductor()) + " vs " +
                          std::to_string(o.spec_->conductor()) + ")");
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw InternalError("rational_value on a non-rational field element");
  return coeffs_[0];
}

FieldElement FieldElement::conjugate() const {
  int n2 = 2 * spec_->conductor();
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& img = spec_->power_table_[(n2 - static_cast<long>(j)) % n2];
    for (size_t k = 0; k < out.size(); ++k) out[k] += coeffs_[j] * img[k];
  }
  return FieldElement(spec_, std::move(out));
}

bool FieldElement::is_real() const {
  if (spec_->ambient_degree() == 1) return true;
  return conjugate() == *this;
}

double FieldElement::to_double() const {
  double n = spec_->conductor();
  double acc = 0.0;
  for (size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) acc += coeffs_[j].get_d() * std::cos(M_PI * static_cast<double>(j) / n);
  return acc;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  double v = to_double();
  if (std::abs(v) < 1e-9)
    throw InternalError("sign of a nonzero field element is numerically ambiguous: " + to_string());
  return v > 0 ? 1 : -1;
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_compatible(o);
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
  return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_compatible(o);
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] - o.coeffs_[i];
  return FieldElement(spec_, std::move(out));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement FieldElement::operator*(const Rational& q) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * q;
  return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_compatible(o);
  size_t d = coeffs_.size();
  if (d == 1) return FieldElement(spec_, {coeffs_[0] * o.coeffs_[0]});
  // convolve, then fold the overflow powers back with the power table
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j)
      if (o.coeffs_[j] != 0) conv[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + d);
  for (size_t k = d; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    const auto& img = spec_->power_table_[k];
    for (size_t t = 0; t < d; ++t) out[t] += conv[k] * img[t];
  }
  return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ValidationError("division by zero field element");
  size_t d = coeffs_.size();
  if (d == 1) return FieldElement(spec_, {Rational(1) / coeffs_[0]});
  // Extended Euclid in Q[x]: u * this + v * Phi = 1, so u is the inverse.
  Poly r0 = spec_->modulus();
  Poly r1(coeffs_);
  trim(r1);
  Poly s0 = {};              // coefficient of `this` alongside r0
  Poly s1 = {Rational(1)};   // and alongside r1
  while (!r1.empty()) {
    // r0 = q * r1 + r
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    Poly r = r0;
    while (r.size() >= r1.size() && !r.empty()) {
      Rational c = r.back() / r1.back();
      size_t off = r.size() - r1.size();
      q[off] = c;
      for (size_t j = 0; j < r1.size(); ++j) r[off + j] -= c * r1[j];
      trim(r);
    }
    Poly s = s0;
    {
      Poly qs = poly_mul(q, s1);
      s.resize(std::max(s.size(), qs.size()), Rational(0));
      for (size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
      trim(s);
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (r0.size() != 1)
    throw InternalError("field element shares a factor with the modulus; field is broken");
  // scale so the gcd is exactly 1
  Rational scale = Rational(1) / r0[0];
  Poly inv = poly_mod(std::move(s0), spec_->modulus());
  std::vector<Rational> out(d, Rational(0));
  for (size_t i = 0; i < inv.size(); ++i) out[i] = inv[i] * scale;
  return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_compatible(o);
  if (coeffs_.size() == 1) {
    if (o.coeffs_[0] == 0) throw ValidationError("division by zero field element");
    return FieldElement(spec_, {coeffs_[0] / o.coeffs_[0]});
  }
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_compatible(o);
  return coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[j].get_str();
    if (j >= 1) os << "*z" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace klsheaf
