#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bkl/laurent.hpp"

using bkl::Laurent;

namespace {

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expd(-6, 6), coeffd(-9, 9);
  Laurent p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(expd(rng), coeffd(rng));
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  Laurent q = Laurent::q();
  Laurent qi = Laurent::monomial(-1);
  CHECK((q + qi).str() == "q+q^-1");
  CHECK(((q - qi) * (q + qi)).str() == "q^2-q^-2");
  Laurent p = Laurent::monomial(2, 3) - Laurent::one();
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("bar involution on coefficients") {
  CHECK(Laurent::q().bar().str() == "q^-1");
  Laurent s = Laurent::q() + Laurent::monomial(-1);
  CHECK(s.bar() == s);
  Laurent p = Laurent::one() + Laurent::monomial(3, 2);
  CHECK(p.bar().str() == "1+2*q^-3");

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent a = random_poly(rng);
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("quantum integers and factorials") {
  CHECK(bkl::quantum_integer(1).is_one());
  CHECK(bkl::quantum_integer(2).str() == "q+q^-1");
  Laurent expect = (Laurent::q() + Laurent::monomial(-1)) *
                   (Laurent::monomial(2) + Laurent::one() + Laurent::monomial(-2));
  CHECK(bkl::quantum_factorial(3) == expect);
  CHECK_THROWS_AS(bkl::quantum_integer(0), bkl::DomainError);
  CHECK_THROWS_AS(bkl::quantum_factorial(-1), bkl::DomainError);
  for (int r = 1; r <= 8; ++r) {
    Laurent f = bkl::quantum_factorial(r);
    CHECK(f.bar() == f);
  }
}

TEST_CASE("positive and negative solve") {
  Laurent c = Laurent::q() - Laurent::monomial(-1);
  CHECK(bkl::positive_solve(c) == Laurent::q());
  CHECK(bkl::negative_solve(c) == -Laurent::monomial(-1));
  CHECK(bkl::positive_solve(Laurent()).is_zero());
  CHECK(bkl::negative_solve(Laurent()).is_zero());

  Laurent c2 = Laurent::monomial(3) + Laurent::monomial(1, 2) -
               Laurent::monomial(-1, 2) - Laurent::monomial(-3);
  CHECK(bkl::positive_solve(c2) == Laurent::monomial(3) + Laurent::monomial(1, 2));
  CHECK(bkl::negative_solve(c2) ==
        -(Laurent::monomial(-1, 2) + Laurent::monomial(-3)));

  CHECK_THROWS_AS(bkl::positive_solve(Laurent::one()), bkl::BarAntisymmetryError);
  CHECK_THROWS_AS(bkl::negative_solve(Laurent::q()), bkl::BarAntisymmetryError);

  // t := positive_solve(c) satisfies t - bar(t) = c whenever bar(c) = -c
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Laurent a = random_poly(rng);
    Laurent c3 = a - a.bar();
    Laurent t = bkl::positive_solve(c3);
    CHECK(t - t.bar() == c3);
    CHECK(t.in_qZq());
    Laurent u = bkl::negative_solve(c3);
    CHECK(u - u.bar() == c3);
    CHECK(u.in_qinvZqinv());
  }
}

TEST_CASE("predicates") {
  CHECK((Laurent::q() + Laurent::monomial(-1)).eval_at_one() == 2);
  CHECK((Laurent::monomial(2) + Laurent::q()).in_qZq());
  CHECK(!(Laurent::one() + Laurent::q()).in_qZq());
  CHECK(Laurent::monomial(-1, -1).nonneg_in_neg_qinv());
  CHECK(!Laurent::monomial(-1).nonneg_in_neg_qinv());
  CHECK((Laurent::monomial(2, 3) + Laurent::q()).nonneg_in_q());
  CHECK(!Laurent::monomial(-2).nonneg_in_q());
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division") {
  Laurent a = bkl::quantum_factorial(4);
  Laurent b = bkl::quantum_integer(4);
  CHECK(bkl::exact_div(a, b) == bkl::quantum_factorial(3));
  CHECK_THROWS_AS(bkl::exact_div(Laurent::q() + Laurent::one(), Laurent::from_int(2)),
                  bkl::ExactDivisionError);
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    Laurent a2 = random_poly(rng), b2 = random_poly(rng);
    if (b2.is_zero()) continue;
    CHECK(bkl::exact_div(a2 * b2, b2) == a2);
  }
}

TEST_CASE("text rendering and parsing") {
  Laurent p = Laurent::monomial(3) + Laurent::monomial(1, 2) - Laurent::one();
  CHECK(p.str() == "q^3+2*q-1");
  CHECK(Laurent::parse("q^3+2*q-1") == p);
  CHECK(Laurent::parse("0").is_zero());
  CHECK(Laurent().str() == "0");
  CHECK(Laurent::monomial(-1, -1).str() == "-q^-1");
  CHECK(Laurent::parse("-q^-1") == Laurent::monomial(-1, -1));
  CHECK(Laurent::parse("q") == Laurent::q());
  CHECK(Laurent::neg_q_pow(-1).str() == "-q^-1");
  CHECK(Laurent::neg_q_pow(2).str() == "q^2");
  CHECK_THROWS_AS(Laurent::parse("2q"), bkl::ParseError);
  CHECK_THROWS_AS(Laurent::parse(""), bkl::ParseError);
  CHECK_THROWS_AS(Laurent::parse("q^"), bkl::ParseError);

  std::mt19937 rng(19);
  for (int i = 0; i < 200; ++i) {
    Laurent a = random_poly(rng);
    CHECK(Laurent::parse(a.str()) == a);
  }
}
