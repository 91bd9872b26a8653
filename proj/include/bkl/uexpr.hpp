#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkl/fock.hpp"
#include "bkl/laurent.hpp"

namespace bkl {

// One abstract generator symbol. Words are read left to right as operator
// products, so the rightmost symbol acts first.
struct USymbol {
  enum Kind : unsigned char { E, F, K, Kinv } kind;
  int a;
  auto operator<=>(const USymbol&) const = default;
};

using UWord = std::vector<USymbol>;

// Formal Z[q,q^-1]-linear combination of words in E_a, F_a, K_a, K_a^{-1}.
// Canonical form merges like words and drops zero coefficients; no algebra
// relations are ever applied.
class UExpression {
 public:
  UExpression() = default;
  static UExpression term(UWord w, Laurent c = Laurent::one());
  static UExpression gen(USymbol::Kind kind, int a);

  const std::map<UWord, Laurent>& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }
  int word_count() const { return static_cast<int>(words_.size()); }

  void add(const UWord& w, const Laurent& c);
  UExpression& operator+=(const UExpression& o);
  friend UExpression operator+(UExpression a, const UExpression& b) { return a += b; }
  friend UExpression operator*(const UExpression& a, const UExpression& b);
  UExpression scaled(const Laurent& c) const;
  bool operator==(const UExpression& o) const { return words_ == o.words_; }

  std::string str() const;

 private:
  std::map<UWord, Laurent> words_;
};

// The braid automorphism T_a applied symbolically, generator by generator.
UExpression braid_T(int a, const UExpression& x);

// Apply the expression to a vector, rightmost symbol first. Generator
// indices must fit the level of u.
FockVector evaluate(const UExpression& x, const FockVector& u);

}  // namespace bkl
