#pragma once

#include <memory>
#include <mutex>

#include "klsheaf/coxeter.hpp"
#include "klsheaf/laurent.hpp"

namespace klsheaf {

enum class HeckeBasis { T, Ttilde };

// Finitely supported Z[v,v^{-1}]-combination of basis elements indexed by
// group elements of one ball.  Plain data; all algebra lives on the
// context, which supplies lengths and products.
struct HeckeElement {
  HeckeBasis basis = HeckeBasis::T;
  std::map<ElementId, LaurentPoly> support;  // nonzero coefficients only

  bool operator==(const HeckeElement& o) const { return basis == o.basis && support == o.support; }
  void add_term(ElementId x, const LaurentPoly& c);
};

// The Hecke algebra of the system, with products evaluated inside an
// enumerated ball.  Multiplication follows the two defining relations in
// the T-basis; T~_x = v^{l(x)} T_x rescales between the bases.  Products
// whose support would leave the ball throw BallExhausted.
//
// kl_basis computes the self-dual basis element C'_x by a triangular
// solve directly on its defining properties: walking the interval [e, x]
// downwards, the coefficient at each vertex is the unique polynomial in
// v Z[v] whose bar-antisymmetrization matches the lower-order terms
// contributed by everything above.
class HeckeContext {
public:
  explicit HeckeContext(BallPtr ball) : ball_(std::move(ball)) {}

  const BallPtr& ball() const { return ball_; }

  HeckeElement unit() const;                      // T_e
  HeckeElement basis_element(ElementId x, HeckeBasis basis) const;

  HeckeElement to_basis(const HeckeElement& h, HeckeBasis basis) const;
  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement subtract(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement scale(const HeckeElement& h, const LaurentPoly& c) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement bar_involution(const HeckeElement& h) const;

  // T_w^{-1} in the T basis, by induction on the length of w.
  HeckeElement t_inverse(ElementId w) const;

  struct KLElement {
    ElementId x = kNoElement;
    HeckeElement cprime;                    // in the T~ basis
    std::map<ElementId, LaurentPoly> h;     // h_{y,x}, nonzero entries
  };
  const KLElement& kl_basis(ElementId x) const;

  // P_{y,x} as a polynomial in q, recovered from h_{y,x} via
  // P(v^{-2}) = v^{l(y)-l(x)} h(v).
  LaurentPoly kl_polynomial(const LaurentPoly& h_yx, int len_x, int len_y) const;

private:
  HeckeElement multiply_by_generator(const HeckeElement& t_basis_elem, int s) const;
  const HeckeElement& bar_ttilde(ElementId y) const;  // d(T~_y) in the T~ basis

  BallPtr ball_;
  mutable std::mutex mu_;
  mutable std::map<ElementId, HeckeElement> inverse_cache_;
  mutable std::map<ElementId, HeckeElement> bar_ttilde_cache_;
  mutable std::map<ElementId, KLElement> kl_cache_;
};

}  // namespace klsheaf
