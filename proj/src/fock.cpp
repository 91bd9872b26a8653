#include "bkl/fock.hpp"

#include <algorithm>

namespace bkl {

FockVector::FockVector(ZeroOneSequence b, int level) : b_(std::move(b)), level_(level) {
  if (level_ < 1) throw DomainError("truncation level must be >= 1");
}

FockVector FockVector::monomial(const ZeroOneSequence& b, int level, const Weight& f,
                                Laurent c) {
  FockVector u(b, level);
  u.add_term(f, c);
  return u;
}

int FockVector::support_radius() const {
  int r = 0;
  for (const auto& [f, c] : terms_)
    for (int v : f) r = std::max(r, std::abs(v));
  return r;
}

void FockVector::add_term(const Weight& f, const Laurent& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(f.size()) != b_.size())
    throw DomainError("weight length does not match sequence");
  for (int v : f)
    if (v < -level_ || v > level_)
      throw TruncationError("monomial index outside the level-" +
                            std::to_string(level_) + " window: " + weight_str(f));
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(f, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (!(b_ == o.b_) || level_ != o.level_)
    throw TruncationError("vector space mismatch in addition");
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (!(b_ == o.b_) || level_ != o.level_)
    throw TruncationError("vector space mismatch in subtraction");
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

FockVector FockVector::scaled(const Laurent& c) const {
  FockVector r(b_, level_);
  if (c.is_zero()) return r;
  for (const auto& [f, v] : terms_) r.terms_.emplace(f, v * c);
  return r;
}

bool FockVector::operator==(const FockVector& o) const {
  return b_ == o.b_ && level_ == o.level_ && terms_ == o.terms_;
}

Laurent coefficient(const FockVector& u, const Weight& f) {
  auto it = u.terms().find(f);
  return it == u.terms().end() ? Laurent() : it->second;
}

Laurent monomial_pairing(const FockVector& u, const FockVector& v) {
  Laurent s;
  for (const auto& [f, c] : u.terms()) s += c * coefficient(v, f);
  return s;
}

namespace {

// K_{x,y} := K_x K_y^{-1} weight on a single slot holding value c.
int k_pair_exponent(int slot_type, int x, int y, int c) {
  int e = (c == x ? 1 : 0) - (c == y ? 1 : 0);
  return slot_type == 0 ? e : -e;
}

void check_EF_range(int a, const FockVector& u) {
  if (a < -u.level() || a > u.level() - 1)
    throw GeneratorRangeError("generator index " + std::to_string(a) +
                              " outside [-k, k-1] for k = " + std::to_string(u.level()));
}

}  // namespace

FockVector act_E(int a, const FockVector& u) {
  check_EF_range(a, u);
  const auto& b = u.sequence();
  FockVector r(b, u.level());
  for (const auto& [f, c] : u.terms()) {
    for (int i = 1; i <= b.size(); ++i) {
      const int v = f[i - 1];
      Weight g = f;
      if (b.bit(i) == 0) {
        if (v != a + 1) continue;
        g[i - 1] = a;
      } else {
        if (v != a) continue;
        g[i - 1] = a + 1;
      }
      int e = 0;  // K_{a+1,a} on every slot right of i
      for (int j = i + 1; j <= b.size(); ++j)
        e += k_pair_exponent(b.bit(j), a + 1, a, f[j - 1]);
      r.add_term(g, c.shifted(e));
    }
  }
  return r;
}

FockVector act_F(int a, const FockVector& u) {
  check_EF_range(a, u);
  const auto& b = u.sequence();
  FockVector r(b, u.level());
  for (const auto& [f, c] : u.terms()) {
    for (int i = 1; i <= b.size(); ++i) {
      const int v = f[i - 1];
      Weight g = f;
      if (b.bit(i) == 0) {
        if (v != a) continue;
        g[i - 1] = a + 1;
      } else {
        if (v != a + 1) continue;
        g[i - 1] = a;
      }
      int e = 0;  // K_{a,a+1} on every slot left of i
      for (int j = 1; j < i; ++j)
        e += k_pair_exponent(b.bit(j), a, a + 1, f[j - 1]);
      r.add_term(g, c.shifted(e));
    }
  }
  return r;
}

FockVector act_K(int a, const FockVector& u) {
  if (a < -u.level() || a > u.level())
    throw GeneratorRangeError("K index outside [-k, k]");
  const auto& b = u.sequence();
  FockVector r(b, u.level());
  for (const auto& [f, c] : u.terms()) {
    int e = 0;
    for (int i = 1; i <= b.size(); ++i) {
      int d = (f[i - 1] == a) ? 1 : 0;
      e += b.bit(i) == 0 ? d : -d;
    }
    r.add_term(f, c.shifted(e));
  }
  return r;
}

FockVector act_K_inv(int a, const FockVector& u) {
  if (a < -u.level() || a > u.level())
    throw GeneratorRangeError("K index outside [-k, k]");
  const auto& b = u.sequence();
  FockVector r(b, u.level());
  for (const auto& [f, c] : u.terms()) {
    int e = 0;
    for (int i = 1; i <= b.size(); ++i) {
      int d = (f[i - 1] == a) ? 1 : 0;
      e += b.bit(i) == 0 ? d : -d;
    }
    r.add_term(f, c.shifted(-e));
  }
  return r;
}

FockVector hecke_act(const FockVector& u, int i) {
  const auto& b = u.sequence();
  if (i < 1 || i >= b.size() || b.is_block_boundary(i))
    throw BoundaryGeneratorError("H_" + std::to_string(i) +
                                 " is not defined across a block boundary");
  FockVector r(b, u.level());
  const Laurent qmqi = Laurent::q() - Laurent::monomial(-1);
  for (const auto& [f, c] : u.terms()) {
    Weight fs = f;
    std::swap(fs[i - 1], fs[i]);
    if (fs == f) {
      r.add_term(f, c.shifted(-1));
    } else if (bruhat_leq(b, f, fs)) {
      r.add_term(fs, c);
    } else if (bruhat_leq(b, fs, f)) {
      r.add_term(fs, c);
      r.add_term(f, -(c * qmqi));
    } else {
      throw Error("f and f.s_i are incomparable; broken ordering");
    }
  }
  return r;
}

FockVector hecke_bar_act(const FockVector& u, int i) {
  FockVector r = hecke_act(u, i);
  r += u.scaled(Laurent::q() - Laurent::monomial(-1));
  return r;
}

FockVector k_expand(const ZeroOneSequence& b, int level, const Weight& g) {
  if (!is_dominant(b, g)) return FockVector(b, level);
  const SlotPerm w0 = longest_element(b);
  const int l0 = perm_length(w0);
  const Weight base = apply_perm(g, w0);
  FockVector r(b, level);
  for (const SlotPerm& w : parabolic_group(b))
    r.add_term(apply_perm(base, w), Laurent::neg_q_pow(perm_length(w) - l0));
  return r;
}

FockVector h0_act(const FockVector& u) {
  const auto& b = u.sequence();
  const SlotPerm w0 = longest_element(b);
  FockVector r(b, u.level());
  for (const auto& [f, c] : u.terms()) {
    MinimalRep rep = minimal_antidominant_rep(b, f);
    Weight top = apply_perm(apply_perm(f, rep.x), w0);
    if (!is_dominant(b, top)) continue;
    r += k_expand(b, u.level(), top).scaled(c * Laurent::neg_q_pow(rep.length));
  }
  return r;
}

std::map<Weight, Laurent> k_basis_decompose(const FockVector& u) {
  const auto& b = u.sequence();
  std::map<Weight, Laurent> coords;
  FockVector rest = u;
  while (!rest.is_zero()) {
    // Pick the support element highest in the linear extension; for a vector
    // in the wedge space it must be b-dominant and its K-expansion peels off.
    std::vector<Weight> supp;
    for (const auto& [f, c] : rest.terms()) supp.push_back(f);
    sort_by_bruhat_rank(b, u.level(), supp);
    const Weight top = supp.back();
    if (!is_dominant(b, top))
      throw NotInWedgeSpaceError("leading index " + weight_str(top) +
                                 " is not dominant");
    const Laurent c = coefficient(rest, top);
    coords[top] = c;
    rest -= k_expand(b, u.level(), top).scaled(c);
    if (!coefficient(rest, top).is_zero())
      throw NotInWedgeSpaceError("K-expansion did not eliminate " + weight_str(top));
  }
  return coords;
}

FockVector sigma_map(const FockVector& u) {
  FockVector r(u.sequence(), u.level());
  for (const auto& [f, c] : u.terms()) {
    Weight g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = -f[i];
    r.add_term(g, c.bar());
  }
  return r;
}

}  // namespace bkl
