#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace klsheaf {

// Laurent polynomial in one variable v with arbitrary-precision integer
// coefficients.  The zero coefficient is never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;  // zero
  static LaurentPoly from_int(long c) { return monomial(mpz_class(c), 0); }
  static LaurentPoly monomial(mpz_class coeff, int exp);
  static LaurentPoly v(int exp) { return monomial(mpz_class(1), exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // v -> v^{-1}
  LaurentPoly bar() const;
  // multiplication by v^k
  LaurentPoly shifted(int k) const;
  // the part with strictly positive exponents
  LaurentPoly positive_part() const;
  // support contained in v Z[v]
  bool in_v_zv() const { return terms_.empty() || min_exp() >= 1; }
  // evaluation at v = 1
  mpz_class at_one() const;

  std::string to_string(const std::string& var = "v") const;

private:
  std::map<int, mpz_class> terms_;
};

}  // namespace klsheaf
