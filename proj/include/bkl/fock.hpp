#pragma once

#include <map>

#include "bkl/laurent.hpp"
#include "bkl/order.hpp"

namespace bkl {

// Finitely supported combination of standard monomials M_f over a fixed
// sequence b at truncation level k. All indices stay inside [-k,k]; no zero
// coefficients are stored.
class FockVector {
 public:
  FockVector(ZeroOneSequence b, int level);
  static FockVector monomial(const ZeroOneSequence& b, int level, const Weight& f,
                             Laurent c = Laurent::one());

  const ZeroOneSequence& sequence() const { return b_; }
  int level() const { return level_; }
  const std::map<Weight, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }
  // largest |f(i)| over the support; 0 for the zero vector
  int support_radius() const;

  void add_term(const Weight& f, const Laurent& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scaled(const Laurent& c) const;
  bool operator==(const FockVector& o) const;
  bool operator!=(const FockVector& o) const { return !(*this == o); }

 private:
  ZeroOneSequence b_;
  int level_;
  std::map<Weight, Laurent> terms_;
};

Laurent coefficient(const FockVector& u, const Weight& f);
// sum_g (u, M_g)(v, M_g) under the monomial pairing (M_f, M_g) = delta_{fg}
Laurent monomial_pairing(const FockVector& u, const FockVector& v);

// Quantum-group generator actions through the iterated comultiplication:
// E_a carries K_{a+1,a} on the slots right of the acting slot, F_a carries
// K_{a,a+1} on the slots left of it, K_a acts diagonally.
FockVector act_E(int a, const FockVector& u);
FockVector act_F(int a, const FockVector& u);
FockVector act_K(int a, const FockVector& u);
FockVector act_K_inv(int a, const FockVector& u);

// Right Hecke action of H_i, i a non-boundary slot.
FockVector hecke_act(const FockVector& u, int i);
// H_i + (q - q^{-1}), the bar image of H_i.
FockVector hecke_bar_act(const FockVector& u, int i);

// Right action of the signed symmetrizer H_0, in closed form per monomial.
FockVector h0_act(const FockVector& u);

// K_g = sum_{w in S^b} (-q)^{l(w)-l(w_0)} M_{g.w_0.w} for b-dominant g.
FockVector k_expand(const ZeroOneSequence& b, int level, const Weight& g);
// Coordinates of u in the K-basis; u must lie in the image of h0_act.
std::map<Weight, Laurent> k_basis_decompose(const FockVector& u);

// sigma(M_f) = M_{-f}, antilinear.
FockVector sigma_map(const FockVector& u);

}  // namespace bkl
