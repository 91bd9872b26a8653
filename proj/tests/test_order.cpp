#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bkl/order.hpp"

using namespace bkl;

namespace {

// Independent comparison straight from the characterization: sweep every
// integer a in a safely wide range instead of only attained values.
bool bruhat_leq_oracle(const ZeroOneSequence& b, const Weight& g, const Weight& f) {
  int lo = *std::min_element(g.begin(), g.end());
  lo = std::min(lo, *std::min_element(f.begin(), f.end())) - 2;
  int hi = *std::max_element(g.begin(), g.end());
  hi = std::max(hi, *std::max_element(f.begin(), f.end())) + 2;
  for (int a = lo; a <= hi; ++a) {
    if (sharp(b, g, a, 1) != sharp(b, f, a, 1)) return false;
    for (int j = 2; j <= b.size(); ++j)
      if (sharp(b, g, a, j) > sharp(b, f, a, j)) return false;
  }
  return true;
}

std::vector<Weight> all_weights(int len, int k) {
  std::vector<Weight> out;
  Weight cur(len, -k);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < len && cur[i] == k) cur[i++] = -k;
    if (i == len) break;
    ++cur[i];
  }
  return out;
}

std::vector<ZeroOneSequence> all_patterns(int len) {
  std::vector<ZeroOneSequence> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<int> bits(len);
    for (int i = 0; i < len; ++i) bits[i] = (mask >> i) & 1;
    out.emplace_back(std::move(bits));
  }
  return out;
}

}  // namespace

TEST_CASE("sequence blocks") {
  auto b = ZeroOneSequence::parse("101010");
  CHECK(b.zeros() == 3);
  CHECK(b.ones() == 3);
  CHECK(b.block_count() == 6);
  auto c = ZeroOneSequence::parse("110100");
  CHECK(c.block_count() == 4);
  CHECK(c.block_end(1) == 2);
  CHECK(c.block_end(2) == 3);
  CHECK(c.is_block_boundary(2));
  CHECK(c.is_block_boundary(4));
  CHECK(!c.is_block_boundary(5));
  CHECK(ZeroOneSequence::parse("111000").is_standard());
  CHECK(!b.is_standard());
  CHECK_THROWS_AS(ZeroOneSequence::parse("102"), ParseError);
}

TEST_CASE("wt_prefix") {
  auto b = ZeroOneSequence::parse("01");
  CHECK(wt_prefix(b, {0, 0}, 1).is_zero());
  IntegralWeight w;
  w.add(1, 1);
  w.add(2, -1);
  CHECK(wt_prefix(b, {1, 2}, 1) == w);
  IntegralWeight w2;
  w2.add(2, -1);
  CHECK(wt_prefix(b, {1, 2}, 2) == w2);
  CHECK_THROWS_AS(wt_prefix(b, {1, 2}, 3), DomainError);
}

TEST_CASE("dominance on the eps lattice") {
  IntegralWeight e0, e1;
  e0.add(0, 1);
  e1.add(1, 1);
  CHECK(dominance_leq(e1, e0));
  CHECK(dominance_leq(e0, e0));
  CHECK(!dominance_leq(e0, e1));
}

TEST_CASE("bruhat comparisons") {
  auto b00 = ZeroOneSequence::parse("00");
  CHECK(bruhat_leq(b00, {1, 2}, {2, 1}));
  CHECK(!bruhat_leq(b00, {2, 1}, {1, 2}));
  auto b01 = ZeroOneSequence::parse("01");
  CHECK(bruhat_leq(b01, {0, 0}, {0, 0}));
  CHECK(!bruhat_leq(b01, {1, 1}, {0, 0}));
  CHECK(bruhat_leq(b01, {0, 0}, {1, 1}));
}

TEST_CASE("bruhat agrees with the wide-sweep oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(1, 4), val(-3, 3), bit(0, 1);
  for (int trial = 0; trial < 3000; ++trial) {
    int sz = len(rng);
    std::vector<int> bits(sz);
    for (auto& x : bits) x = bit(rng);
    ZeroOneSequence b(bits);
    Weight g(sz), f(sz);
    for (auto& x : g) x = val(rng);
    for (auto& x : f) x = val(rng);
    CHECK(bruhat_leq(b, g, f) == bruhat_leq_oracle(b, g, f));
  }
}

TEST_CASE("bruhat is a partial order; weight and prefix monotonicity") {
  for (int len : {2, 3}) {
    int k = (len == 2) ? 2 : 1;
    auto weights = all_weights(len, k);
    for (const auto& b : all_patterns(len)) {
      for (const auto& g : weights) {
        CHECK(bruhat_leq(b, g, g));
        for (const auto& f : weights) {
          bool gf = bruhat_leq(b, g, f);
          if (gf && bruhat_leq(b, f, g)) CHECK(g == f);
          if (!gf) continue;
          CHECK(wt(b, g) == wt(b, f));
          for (int j = 1; j <= len; ++j)
            CHECK(dominance_leq(wt_prefix(b, g, j), wt_prefix(b, f, j)));
          for (const auto& h : weights)
            if (bruhat_leq(b, f, h)) CHECK(bruhat_leq(b, g, h));
        }
      }
    }
  }
}

TEST_CASE("weight classes and intervals") {
  auto b01 = ZeroOneSequence::parse("01");
  auto cls = weight_class(b01, {0, 0}, 1);
  CHECK(cls == std::vector<Weight>{{-1, -1}, {0, 0}, {1, 1}});
  auto b00 = ZeroOneSequence::parse("00");
  CHECK(weight_class(b00, {0, 1}, 1) == std::vector<Weight>{{0, 1}, {1, 0}});
  CHECK(weight_class(ZeroOneSequence::parse("0"), {0}, 2) == std::vector<Weight>{{0}});
  CHECK_THROWS_AS(weight_class(b00, {3, 0}, 1), TruncationError);

  CHECK(interval(b01, {-1, -1}, {0, 0}, 1) == std::vector<Weight>{{-1, -1}, {0, 0}});
  CHECK(interval(b00, {1, 0}, {1, 0}, 1) == std::vector<Weight>{{1, 0}});
  CHECK(interval(b00, {0, 1}, {1, 0}, 1) == std::vector<Weight>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(interval(b00, {1, 0}, {0, 1}, 1), EmptyIntervalError);

  // exhaustive scan oracle for classes
  for (const auto& b : all_patterns(3)) {
    for (const auto& f : all_weights(3, 1)) {
      std::vector<Weight> expect;
      for (const auto& h : all_weights(3, 1))
        if (wt(b, h) == wt(b, f)) expect.push_back(h);
      std::sort(expect.begin(), expect.end());
      CHECK(weight_class(b, f, 1) == expect);
    }
  }
}

TEST_CASE("weakly dominant orbits stay below f") {
  for (const auto& b : all_patterns(3)) {
    auto weights = all_weights(3, 1);
    for (const auto& f : weights) {
      bool weakly_dom = true;
      for (int j = 1; j <= b.block_count() && weakly_dom; ++j) {
        int sign = b.bit(b.block_start(j)) == 0 ? 1 : -1;
        for (int i = b.block_start(j); i < b.block_end(j); ++i)
          if (sign * f[i - 1] < sign * f[i]) weakly_dom = false;
      }
      if (!weakly_dom) continue;
      for (const auto& g : weights) {
        if (!bruhat_leq(b, g, f)) continue;
        for (int i = 1; i < 3; ++i) {
          if (b.is_block_boundary(i)) continue;
          Weight gs = g;
          std::swap(gs[i - 1], gs[i]);
          CHECK(bruhat_leq(b, gs, f));
        }
      }
    }
  }
}

TEST_CASE("dominance predicates") {
  CHECK(is_dominant(ZeroOneSequence::parse("01"), {3, -2}));
  CHECK(!is_dominant(ZeroOneSequence::parse("00"), {2, 2}));
  CHECK(is_dominant(ZeroOneSequence::parse("11"), {1, 2}));
  CHECK(is_antidominant(ZeroOneSequence::parse("00"), {1, 1}));
  CHECK(!is_antidominant(ZeroOneSequence::parse("00"), {2, 1}));
}

TEST_CASE("minimal antidominant representative") {
  auto b00 = ZeroOneSequence::parse("00");
  auto r = minimal_antidominant_rep(b00, {1, 3});
  CHECK(r.length == 0);
  CHECK(r.x == identity_perm(2));
  r = minimal_antidominant_rep(b00, {3, 1});
  CHECK(r.length == 1);
  CHECK(apply_perm({3, 1}, r.x) == Weight{1, 3});
  auto b11 = ZeroOneSequence::parse("11");
  r = minimal_antidominant_rep(b11, {1, 2});
  CHECK(r.length == 1);
  CHECK(apply_perm({1, 2}, r.x) == Weight{2, 1});

  // minimality, exhaustively over blocks of size <= 3
  for (const auto& b : all_patterns(3)) {
    for (const auto& f : all_weights(3, 1)) {
      auto rep = minimal_antidominant_rep(b, f);
      CHECK(is_antidominant(b, apply_perm(f, rep.x)));
      for (const auto& x : parabolic_group(b))
        if (is_antidominant(b, apply_perm(f, x))) CHECK(perm_length(x) >= rep.length);
    }
  }
}

TEST_CASE("s_kappa moves") {
  CHECK(s_kappa_f({0, 4, 1, 0, 2, 3}, 3) == Weight{0, 4, 0, 1, 2, 3});
  CHECK(s_kappa_f({1, 1}, 1) == Weight{2, 2});
  CHECK(s_kappa_f_inverse(s_kappa_f({5, 5, 0}, 1), 1) == Weight{5, 5, 0});
  CHECK(s_kappa_seq(ZeroOneSequence::parse("01"), 1) == ZeroOneSequence::parse("10"));
  CHECK_THROWS_AS(s_kappa_seq(ZeroOneSequence::parse("10"), 1), SequencePatternError);

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> val(-5, 5), pos(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    Weight f(4);
    for (auto& x : f) x = val(rng);
    int kappa = pos(rng);
    CHECK(s_kappa_f_inverse(s_kappa_f(f, kappa), kappa) == f);
    CHECK(s_kappa_f(s_kappa_f_inverse(f, kappa), kappa) == f);
  }
}

TEST_CASE("factorization word onto the standard sequence") {
  CHECK(bst_factorization(ZeroOneSequence::parse("101010")) == std::vector<int>{3, 4, 2});
  CHECK(bst_factorization(ZeroOneSequence::parse("111000")).empty());
  CHECK(bst_factorization(ZeroOneSequence::parse("01")) == std::vector<int>{1});

  // applying the word right-to-left as inverse swaps maps b_st back to b;
  // equivalently left-to-right swaps map b to b_st
  for (const auto& b : all_patterns(5)) {
    auto word = bst_factorization(b);
    std::vector<int> bits = b.bits();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      std::swap(bits[*it - 1], bits[*it]);
    ZeroOneSequence moved(bits);
    CHECK(moved.is_standard());
    CHECK(moved.zeros() == b.zeros());
  }
}

TEST_CASE("bruhat rank is a linear extension") {
  for (const auto& b : all_patterns(3)) {
    auto weights = all_weights(3, 1);
    for (const auto& g : weights)
      for (const auto& f : weights)
        if (bruhat_leq(b, g, f) && !(g == f))
          CHECK(bruhat_rank(b, g, 1) < bruhat_rank(b, f, 1));
  }
}

TEST_CASE("weight literals") {
  CHECK(parse_weight("0,4,1,0,2,3") == Weight{0, 4, 1, 0, 2, 3});
  CHECK(weight_str({-1, 2}) == "-1,2");
  CHECK_THROWS_AS(parse_weight("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_weight("a"), ParseError);
}
