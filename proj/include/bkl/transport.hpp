#pragma once

#include "bkl/canonical.hpp"

namespace bkl {

// Closed-form canonical element of a two-factor space: for the (0,1) and
// (1,0) patterns an equal pair picks up one extra q-term (the pair shifted
// down resp. up), a distinct pair is a bare monomial.
FockVector two_factor_canonical(const ZeroOneSequence& pattern, const Weight& f, int k);

// Coordinates in the basis that replaces the two slots at kappa, kappa+1 by
// two-factor canonical elements. Flavor U lives in the ambient sequence b
// itself (pattern (0,1) at kappa, pair index (-k,-k) excluded); flavor
// UPrime lives in s_kappa b (pattern (1,0), pair (k,k) excluded).
class UBasisVector {
 public:
  enum class Flavor { U, UPrime };

  UBasisVector(ZeroOneSequence b, int kappa, int level, Flavor flavor);

  const ZeroOneSequence& base_sequence() const { return b_; }
  ZeroOneSequence ambient_sequence() const;
  int kappa() const { return kappa_; }
  int level() const { return level_; }
  Flavor flavor() const { return flavor_; }
  const std::map<Weight, Laurent>& terms() const { return terms_; }

  void add_term(const Weight& f, const Laurent& c);

 private:
  ZeroOneSequence b_;  // the (0,1)-pattern sequence
  int kappa_;
  int level_;
  Flavor flavor_;
  std::map<Weight, Laurent> terms_;
};

// Unitriangular change of basis at the crossing; round-trips exactly.
// Throws NotInUSpanError when a boundary pair monomial obstructs the solve.
UBasisVector to_u_basis(const FockVector& u, int kappa, UBasisVector::Flavor flavor);
FockVector from_u_basis(const UBasisVector& x);

// Coordinatewise reindexing f -> s_kappa f turning UPrime coordinates over
// s_kappa b into U coordinates over b.
UBasisVector apply_R_kappa(const UBasisVector& x);

// Independent oracle on two factors: Theta o (diagonal q-twist) o flip.
FockVector r_two_factor_oracle(int k, const FockVector& v);

struct TransportStep {
  int kappa;
  ZeroOneSequence seq;
  Weight index;
  FockVector element;
};

struct TransportChain {
  Weight g;                        // the start index over the standard sequence
  std::vector<TransportStep> steps;  // step 0 is T^{b_st}_g itself
};

// The full pipeline: factor b to b_st, pull f back to g, take the
// stabilized canonical element there and push it through the crossings.
// Every intermediate is checked psi-invariant at the working level.
FockVector transport_canonical(const ZeroOneSequence& b, const Weight& f,
                               int level_cap = 8);
TransportChain transport_chain(const ZeroOneSequence& b, const Weight& f,
                               int level_cap = 8);

}  // namespace bkl
