#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkl/errors.hpp"

namespace bkl {

// Integer tuple f = (f(1),...,f(m+n)); slot access is 1-based in the API,
// matching the conventions used everywhere else in the library.
using Weight = std::vector<int>;

// Element of the free abelian group on {eps_a : a in Z}; no zero entries.
class IntegralWeight {
 public:
  IntegralWeight() = default;
  void add(int a, long long mult);
  long long mult(int a) const;
  const std::map<int, long long>& entries() const { return e_; }
  bool operator==(const IntegralWeight& o) const { return e_ == o.e_; }
  bool operator!=(const IntegralWeight& o) const { return e_ != o.e_; }
  bool operator<(const IntegralWeight& o) const { return e_ < o.e_; }
  bool is_zero() const { return e_.empty(); }
  std::string str() const;

 private:
  std::map<int, long long> e_;
};

// A 0^m 1^n sequence with its block decomposition r_0=0 < r_1 < ... < r_d.
class ZeroOneSequence {
 public:
  explicit ZeroOneSequence(std::vector<int> bits);
  static ZeroOneSequence parse(const std::string& s);  // e.g. "101010"

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int pos) const { return bits_[pos - 1]; }  // pos in 1..m+n
  const std::vector<int>& bits() const { return bits_; }
  int zeros() const { return m_; }
  int ones() const { return n_; }
  int block_count() const { return static_cast<int>(ends_.size()); }
  // r_j for j in 1..d
  int block_end(int j) const { return ends_[j - 1]; }
  int block_start(int j) const { return j == 1 ? 1 : ends_[j - 2] + 1; }
  int block_of(int pos) const;  // 1..d
  // true iff pos is one of r_1..r_{d-1}
  bool is_block_boundary(int pos) const;
  std::string str() const;
  bool operator==(const ZeroOneSequence& o) const { return bits_ == o.bits_; }
  bool operator<(const ZeroOneSequence& o) const { return bits_ < o.bits_; }

  bool is_standard() const;  // (1,...,1,0,...,0)

 private:
  std::vector<int> bits_;
  int m_ = 0, n_ = 0;
  std::vector<int> ends_;
};

// Permutation of slots 1..m+n in one-line notation: perm[i-1] is the image
// of i. Acting on weight functions by composition: (f.x)(i) = f(x(i)).
using SlotPerm = std::vector<int>;

SlotPerm identity_perm(int size);
Weight apply_perm(const Weight& f, const SlotPerm& x);
SlotPerm compose(const SlotPerm& x, const SlotPerm& y);  // (x*y)(i) = x(y(i))
int perm_length(const SlotPerm& x);                      // inversion count
// Blockwise reversal, the longest element of S^b.
SlotPerm longest_element(const ZeroOneSequence& b);
// All of S^b = S_{I_1} x ... x S_{I_d}.
std::vector<SlotPerm> parabolic_group(const ZeroOneSequence& b);

IntegralWeight wt_prefix(const ZeroOneSequence& b, const Weight& f, int j);
IntegralWeight wt(const ZeroOneSequence& b, const Weight& f);

// y - x is a nonnegative integral combination of eps_r - eps_{r+1}.
bool dominance_leq(const IntegralWeight& x, const IntegralWeight& y);

// sharp_b(h,a,j) = sum over i >= j with h(i) <= a of (-1)^{b_i}
long long sharp(const ZeroOneSequence& b, const Weight& h, int a, int j);

// g <=_b f
bool bruhat_leq(const ZeroOneSequence& b, const Weight& g, const Weight& f);

// All h in Z^{m+n}_k with wt_b(h) = wt_b(f), sorted lexicographically.
std::vector<Weight> weight_class(const ZeroOneSequence& b, const Weight& f, int k);
// {h : g <=_b h <=_b f} within the level-k window.
std::vector<Weight> interval(const ZeroOneSequence& b, const Weight& g,
                             const Weight& f, int k);

bool is_dominant(const ZeroOneSequence& b, const Weight& f);
bool is_antidominant(const ZeroOneSequence& b, const Weight& f);

struct MinimalRep {
  SlotPerm x;
  int length = 0;
};
// The minimal-length x in S^b with f.x antidominant (stable blockwise sort).
MinimalRep minimal_antidominant_rep(const ZeroOneSequence& b, const Weight& f);

// Sequence/weight moves at an adjacent (0,1) crossing.
ZeroOneSequence s_kappa_seq(const ZeroOneSequence& b, int kappa);
Weight s_kappa_f(const Weight& f, int kappa);
Weight s_kappa_f_inverse(const Weight& f, int kappa);

// The word of kappa indices mapping b to b_st = (1,..,1,0,..,0), read left
// to right; empty when b is already standard.
std::vector<int> bst_factorization(const ZeroOneSequence& b);

// A strictly monotone rank for <=_b restricted to a level-k window; used as
// a deterministic linear extension (rank, then lex).
long long bruhat_rank(const ZeroOneSequence& b, const Weight& f, int k);
// Sorts a set of weights by (bruhat_rank ascending, then lex); the result is
// a linear extension of <=_b.
void sort_by_bruhat_rank(const ZeroOneSequence& b, int k, std::vector<Weight>& ws);

std::string weight_str(const Weight& f);
Weight parse_weight(const std::string& s);  // "0,4,1,0,2,3"

}  // namespace bkl
