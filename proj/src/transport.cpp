#include "bkl/transport.hpp"

#include <algorithm>

namespace bkl {

namespace {

const Laurent kQ = Laurent::q();

bool is_01(const ZeroOneSequence& s) {
  return s.size() == 2 && s.bit(1) == 0 && s.bit(2) == 1;
}

bool is_10(const ZeroOneSequence& s) {
  return s.size() == 2 && s.bit(1) == 1 && s.bit(2) == 0;
}

}  // namespace

FockVector two_factor_canonical(const ZeroOneSequence& pattern, const Weight& f, int k) {
  if (f.size() != 2) throw DomainError("two_factor_canonical needs a pair");
  FockVector r = FockVector::monomial(pattern, k, f);
  if (f[0] == f[1]) {
    if (is_01(pattern)) {
      r.add_term({f[0] - 1, f[1] - 1}, kQ);  // throws TruncationError at the floor
    } else if (is_10(pattern)) {
      r.add_term({f[0] + 1, f[1] + 1}, kQ);
    } else {
      throw SequencePatternError("two_factor_canonical needs pattern 01 or 10");
    }
  } else if (!is_01(pattern) && !is_10(pattern)) {
    throw SequencePatternError("two_factor_canonical needs pattern 01 or 10");
  }
  return r;
}

UBasisVector::UBasisVector(ZeroOneSequence b, int kappa, int level, Flavor flavor)
    : b_(std::move(b)), kappa_(kappa), level_(level), flavor_(flavor) {
  if (kappa_ < 1 || kappa_ + 1 > b_.size() || b_.bit(kappa_) != 0 ||
      b_.bit(kappa_ + 1) != 1)
    throw SequencePatternError("U basis needs (0,1) at the crossing");
}

ZeroOneSequence UBasisVector::ambient_sequence() const {
  if (flavor_ == Flavor::U) return b_;
  return s_kappa_seq(b_, kappa_);
}

void UBasisVector::add_term(const Weight& f, const Laurent& c) {
  if (c.is_zero()) return;
  const int lo = f[kappa_ - 1], hi = f[kappa_];
  if (flavor_ == Flavor::U && lo == -level_ && hi == -level_)
    throw NotInUSpanError("coordinate at the excluded pair (-k,-k)");
  if (flavor_ == Flavor::UPrime && lo == level_ && hi == level_)
    throw NotInUSpanError("coordinate at the excluded pair (k,k)");
  for (int v : f)
    if (v < -level_ || v > level_)
      throw TruncationError("U coordinate outside the window: " + weight_str(f));
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(f, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// The two-factor expansion of one U coordinate inserted at the crossing.
void add_expansion(FockVector& out, const UBasisVector::Flavor flavor, int kappa,
                   const Weight& h, const Laurent& c) {
  out.add_term(h, c);
  if (h[kappa - 1] == h[kappa]) {
    Weight low = h;
    const int step = (flavor == UBasisVector::Flavor::U) ? -1 : 1;
    low[kappa - 1] += step;
    low[kappa] += step;
    out.add_term(low, c * kQ);
  }
}

// The ambient of a UPrime vector is s_kappa b; undo the crossing swap.
ZeroOneSequence undo_crossing(const ZeroOneSequence& ambient, int kappa) {
  if (kappa < 1 || kappa + 1 > ambient.size() || ambient.bit(kappa) != 1 ||
      ambient.bit(kappa + 1) != 0)
    throw SequencePatternError("UPrime ambient needs (1,0) at the crossing");
  std::vector<int> bits = ambient.bits();
  std::swap(bits[kappa - 1], bits[kappa]);
  return ZeroOneSequence(std::move(bits));
}

}  // namespace

UBasisVector to_u_basis(const FockVector& u, int kappa, UBasisVector::Flavor flavor) {
  const bool prime = flavor == UBasisVector::Flavor::UPrime;
  ZeroOneSequence base = prime ? undo_crossing(u.sequence(), kappa) : u.sequence();
  UBasisVector x(base, kappa, u.level(), flavor);
  FockVector rest = u;
  while (!rest.is_zero()) {
    // process the extremal pair first: cascades only move equal pairs one
    // step toward the excluded boundary
    auto pick = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      const int s = it->first[kappa - 1] + it->first[kappa];
      const int sp = pick->first[kappa - 1] + pick->first[kappa];
      if (prime ? (s < sp) : (s > sp)) pick = it;
    }
    const Weight h = pick->first;
    const Laurent c = pick->second;
    x.add_term(h, c);  // throws NotInUSpanError on a boundary pair
    FockVector expansion(u.sequence(), u.level());
    add_expansion(expansion, flavor, kappa, h, c);
    rest -= expansion;
  }
  return x;
}

FockVector from_u_basis(const UBasisVector& x) {
  FockVector out(x.ambient_sequence(), x.level());
  for (const auto& [h, c] : x.terms()) add_expansion(out, x.flavor(), x.kappa(), h, c);
  return out;
}

UBasisVector apply_R_kappa(const UBasisVector& x) {
  if (x.flavor() != UBasisVector::Flavor::UPrime)
    throw DomainError("apply_R_kappa expects UPrime coordinates");
  UBasisVector out(x.base_sequence(), x.kappa(), x.level(), UBasisVector::Flavor::U);
  for (const auto& [f, c] : x.terms()) out.add_term(s_kappa_f(f, x.kappa()), c);
  return out;
}

FockVector r_two_factor_oracle(int k, const FockVector& v) {
  if (!is_10(v.sequence())) throw SequencePatternError("oracle input lives over (1,0)");
  if (v.level() != k) throw TruncationError("oracle level mismatch");
  const ThetaFactorization& th = build_theta(k);
  const ZeroOneSequence vspace({0});
  FockVector out(ZeroOneSequence::parse("01"), k);
  for (const auto& [f, c] : v.terms()) {
    // flip w_{f(1)} (x) v_{f(2)}, twist by q^{-delta}, then Theta
    Laurent coeff = c;
    if (f[0] == f[1]) coeff = coeff.shifted(-1);
    out += apply_theta(th, FockVector::monomial(vspace, k, {f[1]}), 1, f[0]).scaled(coeff);
  }
  return out;
}

namespace {

FockVector relevel(const FockVector& u, const ZeroOneSequence& b, int k) {
  FockVector r(b, k);
  for (const auto& [f, c] : u.terms()) r.add_term(f, c);
  return r;
}

TransportChain run_chain(const ZeroOneSequence& b, const Weight& f, int level_cap) {
  std::vector<int> ones_first(b.size());
  for (int i = 0; i < b.size(); ++i) ones_first[i] = (i < b.ones()) ? 1 : 0;
  const ZeroOneSequence bst(ones_first);

  const std::vector<int> word = bst_factorization(b);
  Weight g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    g = s_kappa_f_inverse(g, *it);

  FockVector start = stabilized_canonical(bst, g, level_cap);

  int radius = start.support_radius();
  for (int v : f) radius = std::max(radius, std::abs(v));
  int k = radius + 2;
  while (true) {
    if (k > level_cap)
      throw StabilizationCapError("transport needs a level above the cap " +
                                  std::to_string(level_cap));
    try {
      TransportChain chain;
      chain.g = g;
      FockVector cur = relevel(start, bst, k);
      chain.steps.push_back({0, bst, g, cur});
      ZeroOneSequence seq = bst;
      Weight h = g;
      for (int kappa : word) {
        UBasisVector coords =
            apply_R_kappa(to_u_basis(cur, kappa, UBasisVector::Flavor::UPrime));
        cur = from_u_basis(coords);
        seq = coords.ambient_sequence();
        h = s_kappa_f(h, kappa);
        if (!(bar_involution(cur) == cur))
          throw Error("transport step broke bar-invariance at kappa=" +
                      std::to_string(kappa));
        chain.steps.push_back({kappa, seq, h, cur});
      }
      if (!(seq == b) || h != f)
        throw Error("transport word did not land on the requested index");
      return chain;
    } catch (const NotInUSpanError&) {
      k += 2;
    } catch (const TruncationError&) {
      k += 2;
    }
  }
}

}  // namespace

TransportChain transport_chain(const ZeroOneSequence& b, const Weight& f,
                               int level_cap) {
  if (b.is_standard()) {
    TransportChain chain;
    chain.g = f;
    chain.steps.push_back({0, b, f, stabilized_canonical(b, f, level_cap)});
    return chain;
  }
  return run_chain(b, f, level_cap);
}

FockVector transport_canonical(const ZeroOneSequence& b, const Weight& f,
                               int level_cap) {
  return transport_chain(b, f, level_cap).steps.back().element;
}

}  // namespace bkl
