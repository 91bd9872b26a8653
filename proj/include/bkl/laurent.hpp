#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "bkl/errors.hpp"

namespace bkl {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable q, kept in canonical form:
// no zero coefficients are stored, so value equality is representation
// equality. This is the coefficient ring for the whole library; rational
// coefficients are not representable on purpose.
class Laurent {
 public:
  Laurent() = default;

  static Laurent from_int(Int c);
  // c * q^e
  static Laurent monomial(int e, Int c = 1);
  static Laurent q() { return monomial(1); }
  static Laurent one() { return from_int(1); }
  // (-q)^e, valid for negative e as well.
  static Laurent neg_q_pow(int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int e) const;
  int min_exp() const;  // throws DomainError on zero
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  // q -> q^{-1}, termwise exponent negation.
  Laurent bar() const;
  // multiply by q^e
  Laurent shifted(int e) const;

  Int eval_at_one() const;
  // substitute q -> q^{-1} and evaluate coefficients at 1 would be bar+eval;
  // eval at -1 is occasionally useful in tests.
  bool in_qZq() const;          // all exponents >= 1
  bool in_qinvZqinv() const;    // all exponents <= -1
  bool nonneg_coeffs() const;   // all stored coefficients >= 0

  // Rewrites this polynomial in the variable x = q and tests coefficient
  // nonnegativity (i.e. no negative exponents and no negative coefficients).
  bool nonneg_in_q() const;
  // Rewrites in the variable x = -q^{-1}: requires all exponents <= 0 and
  // (-1)^e c_e >= 0 for every term c_e q^e.
  bool nonneg_in_neg_qinv() const;

  void add_term(int e, const Int& c);

  std::string str() const;
  static Laurent parse(const std::string& s);

 private:
  std::map<int, Int> terms_;
};

// [r] = q^{r-1} + q^{r-3} + ... + q^{1-r}, r >= 1.
Laurent quantum_integer(int r);
// [r]! = [1][2]...[r]
Laurent quantum_factorial(int r);

// The unique t in qZ[q] with t - bar(t) = c; requires bar(c) = -c.
Laurent positive_solve(const Laurent& c);
// The unique t in q^{-1}Z[q^{-1}] with t - bar(t) = c; requires bar(c) = -c.
Laurent negative_solve(const Laurent& c);

// Exact division; throws ExactDivisionError if the quotient leaves Z[q,q^{-1}].
Laurent exact_div(const Laurent& a, const Laurent& b);

}  // namespace bkl
