#pragma once

#include <memory>
#include <vector>

#include "bkl/fock.hpp"
#include "bkl/uexpr.hpp"

namespace bkl {

// One factor of the quasi-R-matrix: the braid-transported root vector pair
// for the t-th letter of the reduced word.
struct ThetaPair {
  int letter;       // a_t
  int root_lo = 0;  // beta_t = eps_{root_lo} - eps_{root_hi}
  int root_hi = 0;
  UExpression e;
  UExpression f;
};

// Theta^{(k)} as an ordered factor list for a fixed reduced word of the
// longest element of S_{|k|}; factor [1] acts first.
struct ThetaFactorization {
  int k = 0;
  std::vector<int> word;  // a_1 .. a_N, N = k(2k+1)
  std::vector<ThetaPair> pairs;
};

// The per-k reduced word used throughout: blocks
// (s_{-k})(s_{-k+1} s_{-k}) ... (s_{k-1} ... s_{-k}).
std::vector<int> nested_word(int k);
// Its image under a -> -1-a: blocks (s_{k-1})(s_{k-2} s_{k-1}) ...
std::vector<int> mirror_word(int k);

// Root vector pairs by iterated braid_T along the word's own prefixes.
// Exact, but junk words (with F and K symbols that only cancel on
// evaluation) grow doubly exponentially in the prefix length, so this is
// usable only for short prefixes; kept as the reference the compact
// builders below are pinned against.
ThetaFactorization build_theta_braid(int k, const std::vector<int>& word);

// Production builder for the nested word: the pair for root
// eps_c - eps_d is the braid image T_c T_{c+1} ... T_{d-2} (E_{d-1}),
// an adapted transport word whose trajectory never leaves the positive
// roots, so every braid step is the two-word q-commutator case and the
// result stays at 2^{d-c-1} words. Expanding the transports gives
//   E_{c,d} = E_{d-1} E_{c,d-1} - q^{-1} E_{c,d-1} E_{d-1},
//   F_{c,d} = F_{c,d-1} F_{d-1} - q F_{d-1} F_{c,d-1},
// which is what this assembles.
ThetaFactorization build_theta_nested(int k);

// Same idea along the mirror word, whose adapted transports extend roots
// at the bottom: E_{c,d} = E_c E_{c+1,d} - q^{-1} E_{c+1,d} E_c. Used by
// the reduced-word-independence tests.
ThetaFactorization build_theta_mirror(int k);

// Cached accessor for the production factorization (nested word).
const ThetaFactorization& build_theta(int k);

// Applies Theta to (left tensor last), with the F-side acting on the single
// right factor: each factor contributes 1 + (q - q^{-1}) Ebeta (x) Fbeta
// exactly, since higher divided powers annihilate a single factor.
FockVector apply_theta(const ThetaFactorization& th, const FockVector& left,
                       int last_bit, int last_value);
// Mirror image: E-side on a single left factor, F-side on the right space.
FockVector apply_theta_left(const ThetaFactorization& th, int first_bit,
                            int first_value, const FockVector& right);

// The bar involution psi^{(k)} on the level of u, computed by peeling the
// last tensor factor; psi(M_f) is memoized per (b, k).
FockVector bar_involution(const FockVector& u);
// Alternative recursion peeling the first factor; used to test that the
// involution is independent of the tensor split.
FockVector bar_involution_left_peel(const FockVector& u);

// Drops cached Theta data and psi memos (mainly for benchmarks).
void clear_rmatrix_caches();

struct ThetaDumpRecord {
  int t;
  int a;
  std::string e;
  std::string f;
};
std::vector<ThetaDumpRecord> theta_dump(const ThetaFactorization& th);

}  // namespace bkl
