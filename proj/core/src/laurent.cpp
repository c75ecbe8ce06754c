#include "klsheaf/laurent.hpp"

#include <sstream>

#include "klsheaf/errors.hpp"

namespace klsheaf {

LaurentPoly LaurentPoly::monomial(mpz_class coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw InternalError("min_exp of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw InternalError("max_exp of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      auto& slot = out.terms_[e1 + e2];
      slot += c1 * c2;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    if (e >= 1) out.terms_[e] = c;
  return out;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class acc(0);
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first reads better in tables
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    mpz_class a = (!first && c < 0) ? mpz_class(-c) : c;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a == -1)
        os << "-";
      else if (a != 1)
        os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace klsheaf
