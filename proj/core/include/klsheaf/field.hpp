#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace klsheaf {

using Rational = mpq_class;

class FieldElement;
class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// The coefficient field for one Coxeter system: the smallest cyclotomic
// field Q(zeta_{2N}) containing every 2cos(pi/m_st) that occurs.  Elements
// are kept in the power basis 1, zeta, ..., zeta^{phi(2N)-1} with zeta a
// primitive 2N-th root of unity; the geometry only ever uses elements of
// the real subfield, which is checked rather than encoded.
//
// N = 1 is the rational case (conductor lcm over entries >= 4 is empty);
// then the ambient degree is 1 and arithmetic short-circuits to plain
// rational arithmetic.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
  static FieldSpecPtr rationals();
  static FieldSpecPtr make(int conductor);

  int conductor() const { return conductor_; }
  int ambient_degree() const { return degree_; }
  // Coefficients of the 2N-th cyclotomic polynomial, constant term first,
  // monic of degree phi(2N).
  const std::vector<Rational>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_int(long n) const;
  // zeta^k as a field element, k arbitrary (reduced mod 2N).
  FieldElement root_power(long k) const;
  // 2cos(pi/m) = zeta^{N/m} + zeta^{-N/m}; requires finite m >= 2 dividing
  // the conductor policy (m in {2,3} is rational and always available).
  FieldElement two_cos_pi_over(int m) const;
  // Gram matrix entry for a bond of order m: -cos(pi/m), with m == 0
  // (infinity) contributing -1.
  FieldElement gram_value(int m) const;

  bool same_field(const FieldSpec& other) const { return conductor_ == other.conductor_; }

private:
  friend class FieldElement;
  FieldSpec(int conductor, std::vector<Rational> modulus);

  int conductor_;  // N
  int degree_;     // phi(2N)
  std::vector<Rational> modulus_;
  // x^k mod Phi_{2N} for k = 0 .. 2N, used for multiplication folding and
  // the conjugation map zeta -> zeta^{-1}.
  std::vector<std::vector<Rational>> power_table_;
};

// Validates a Coxeter matrix (symmetric, 1 on the diagonal, off-diagonal
// entries 0 (= infinity) or >= 2) and returns the field generated by its
// finite bond orders.  Entries 2 and 3 contribute rational cosines, so the
// conductor is the lcm of the entries >= 4, or 1 when there are none.
FieldSpecPtr build_field(const std::vector<std::vector<int>>& coxeter_matrix);
void validate_coxeter_matrix(const std::vector<std::vector<int>>& coxeter_matrix);

// An element of the ambient cyclotomic field, immutable in spirit: all
// arithmetic returns fresh values.  Ordering is lexicographic on the
// coefficient vector and is used only as a canonical total order for maps.
class FieldElement {
public:
  FieldElement() = default;  // null element; only assignable

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // True when fixed by zeta -> zeta^{-1}, i.e. the element lies in the
  // real subfield.
  bool is_real() const;
  FieldElement conjugate() const;

  // Numeric image under zeta = exp(i pi / N); meaningful for real
  // elements (the imaginary part is discarded).
  double to_double() const;
  // Sign of a real element: exact zero test, then numeric evaluation with
  // an ambiguity guard.  Throws InternalError when the numeric value is
  // too close to zero to call.
  int sign() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement inverse() const;

  FieldElement operator*(const Rational& q) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // canonical order, not numeric

  std::string to_string() const;

private:
  friend class FieldSpec;
  FieldElement(FieldSpecPtr spec, std::vector<Rational> coeffs);
  void check_compatible(const FieldElement& o) const;

  FieldSpecPtr spec_;
  std::vector<Rational> coeffs_;
};

}  // namespace klsheaf
