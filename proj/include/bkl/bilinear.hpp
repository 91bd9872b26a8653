#pragma once

#include <string>
#include <vector>

#include "bkl/canonical.hpp"

namespace bkl {

struct PairingEntry {
  std::string label;
  Weight f;
  Weight g;
  Laurent value;
  Laurent expected;
  bool pass = false;
};

struct PairingReport {
  ZeroOneSequence b;
  int k;
  std::vector<PairingEntry> entries;

  bool all_pass() const;
  void add(std::string label, Weight f, Weight g, Laurent value, Laurent expected);
};

// <u,v> = sum_g (u, M_g)(sigma(bar v), M_g); finite because u has finite
// support and sigma(bar v) is read only there.
Laurent form_T(const FockVector& u, const FockVector& v);

// prod_k [r_k - r_{k-1}]! over the blocks of b.
Laurent block_factorial(const ZeroOneSequence& b);

// The wedge-space form <u,v>_E = (-1)^{l(w_0)} / block_factorial * <u,v>.
// The sign makes {K_f} orthonormal for every block pattern; division is
// exact or it throws.
Laurent form_E(const FockVector& u, const FockVector& v);

// (K_f, K_g)_E, which must be delta_{fg}.
Laurent k_pairing(const ZeroOneSequence& b, int k, const Weight& f, const Weight& g);

// <L_f, T_{-g}> = delta_{fg}; requires the stabilized support of T_{-g} to
// sit strictly inside the level-k window.
PairingEntry verify_duality(const ZeroOneSequence& b, int k, const Weight& f,
                            const Weight& g);
// The two orthogonality sums sum_h t_{hf}(q) l_{-h,-g}(q^{-1}) and
// sum_h l_{hf}(q) t_{-h,-g}(q^{-1}).
std::vector<PairingEntry> verify_inversion_T(const ZeroOneSequence& b, int k,
                                             const Weight& f, const Weight& g);
// Both expansions of M_f over the level-k window:
// M_f = sum_h t_{-f,-h}(q^{-1}) L_h = sum_h l_{-f,-h}(q^{-1}) T_h.
std::vector<PairingEntry> verify_expansion(const ZeroOneSequence& b, int k,
                                           const Weight& f);

// <L_f, U_{-g.w_0}>_E = delta_{fg} on dominant f, g.
PairingEntry verify_wedge_duality(const ZeroOneSequence& b, int k, const Weight& f,
                                  const Weight& g);
// The two wedge orthogonality sums over dominant h.
std::vector<PairingEntry> verify_wedge_inversion(const ZeroOneSequence& b, int k,
                                                 const Weight& f, const Weight& g);
// K_f = sum_h u_{-f.w0,-h.w0}(q^{-1}) L_h = sum_h l_{-f.w0,-h.w0}(q^{-1}) U_h.
std::vector<PairingEntry> verify_wedge_expansion(const ZeroOneSequence& b, int k,
                                                 const Weight& f);

}  // namespace bkl
