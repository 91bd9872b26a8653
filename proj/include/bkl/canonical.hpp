#pragma once

#include <map>

#include "bkl/fock.hpp"
#include "bkl/rmatrix.hpp"

namespace bkl {

enum class BasisKind { Canonical, Dual };

// Entries (g, f) -> polynomial of one basis family over a level-k window,
// deterministic order (lexicographic g, then f).
struct BKLTable {
  ZeroOneSequence b;
  int k;
  BasisKind kind;
  std::map<std::pair<Weight, Weight>, Laurent> entries;

  Laurent entry(const Weight& g, const Weight& f) const;
};

// r_{gh} = (psi(M_h), M_g) for h running over the lower set of f inside the
// level-k window (keys are (g, h) pairs; r_{hh} = 1).
std::map<std::pair<Weight, Weight>, Laurent> bar_matrix(const ZeroOneSequence& b,
                                                        int k, const Weight& f);

// T^{b,k}_f resp. L^{b,k}_f by the triangular solve against the bar matrix;
// the result is checked to be psi^{(k)}-invariant before returning.
FockVector canonical_element(const ZeroOneSequence& b, int k, const Weight& f);
FockVector dual_canonical_element(const ZeroOneSequence& b, int k, const Weight& f);

// Runs the level ladder k0, k0+2, ... until two consecutive levels agree on
// the full support with no index touching the window boundary, then returns
// the stabilized vector (it equals the untruncated canonical element).
FockVector stabilized_canonical(const ZeroOneSequence& b, const Weight& f,
                                int level_cap = 8);
// pi_k of the dual element; dual supports are unbounded below, so callers
// always receive an explicitly truncated vector at the level they asked for.
FockVector stabilized_dual_truncation(const ZeroOneSequence& b, const Weight& f, int k);

// U_f = T_{f.w_0} H_0 for b-dominant f, and its K-basis coordinates.
FockVector wedge_canonical(const ZeroOneSequence& b, int k, const Weight& f);
std::map<Weight, Laurent> wedge_bkl(const ZeroOneSequence& b, int k, const Weight& f);

// s_{gf}: psi(K_f) decomposed in the K-basis over dominant g.
std::map<std::pair<Weight, Weight>, Laurent> wedge_bar_matrix(const ZeroOneSequence& b,
                                                              int k, const Weight& f);
// Independent route: Lusztig solve directly in the K-basis coordinates
// against s_{gf}; must reproduce wedge_canonical.
FockVector wedge_canonical_solved(const ZeroOneSequence& b, int k, const Weight& f);
// Dual solve in the K-basis; coordinates of the dual canonical element of
// the wedge space over dominant g.
std::map<Weight, Laurent> wedge_dual_coords(const ZeroOneSequence& b, int k,
                                            const Weight& f);

// Full table over every weight class meeting the level-k window. The
// parallel kernel distributes the per-f triangular solves with OpenMP once
// the shared bar data is in place; the serial path is the reference.
BKLTable build_table_serial(const ZeroOneSequence& b, int k, BasisKind kind);
BKLTable build_table_parallel(const ZeroOneSequence& b, int k, BasisKind kind);

}  // namespace bkl
