#include "bkl/rmatrix.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace bkl {

namespace {

const Laurent kQmQi = Laurent::q() - Laurent::monomial(-1);

int word_inversions(int k, const std::vector<int>& word) {
  // one-line form of s_{a_1} ... s_{a_N} acting on {-k..k}
  std::vector<int> perm(2 * k + 1);
  for (int i = 0; i <= 2 * k; ++i) perm[i] = i - k;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    std::swap(perm[*it + k], perm[*it + k + 1]);
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

void check_reduced(int k, const std::vector<int>& word) {
  const int n = k * (2 * k + 1);
  if (static_cast<int>(word.size()) != n || word_inversions(k, word) != n)
    throw DomainError("word of length " + std::to_string(word.size()) +
                      " is not a reduced word for the longest element");
}

std::pair<int, int> root_of(const std::vector<int>& word, int t) {
  int lo = word[t - 1], hi = word[t - 1] + 1;
  for (int i = t - 1; i >= 1; --i) {
    const int a = word[i - 1];
    auto refl = [a](int x) { return x == a ? a + 1 : (x == a + 1 ? a : x); };
    lo = refl(lo);
    hi = refl(hi);
  }
  if (lo >= hi) throw DomainError("word is not reduced at position " + std::to_string(t));
  return {lo, hi};
}

}  // namespace

std::vector<int> nested_word(int k) {
  if (k < 1) throw DomainError("level must be >= 1");
  std::vector<int> word;
  for (int top = -k; top <= k - 1; ++top)
    for (int a = top; a >= -k; --a) word.push_back(a);
  return word;
}

std::vector<int> mirror_word(int k) {
  std::vector<int> word = nested_word(k);
  for (int& a : word) a = -1 - a;
  return word;
}

ThetaFactorization build_theta_braid(int k, const std::vector<int>& word) {
  check_reduced(k, word);
  ThetaFactorization th;
  th.k = k;
  th.word = word;
  const int n = static_cast<int>(word.size());
  for (int t = 1; t <= n; ++t) {
    ThetaPair p;
    p.letter = word[t - 1];
    std::tie(p.root_lo, p.root_hi) = root_of(word, t);
    p.e = UExpression::gen(USymbol::E, word[t - 1]);
    p.f = UExpression::gen(USymbol::F, word[t - 1]);
    for (int i = t - 1; i >= 1; --i) {
      p.e = braid_T(word[i - 1], p.e);
      p.f = braid_T(word[i - 1], p.f);
    }
    th.pairs.push_back(std::move(p));
  }
  return th;
}

namespace {

ThetaFactorization assemble_theta(int k, const std::vector<int>& word, bool top_extend) {
  check_reduced(k, word);
  std::map<std::pair<int, int>, UExpression> evec, fvec;
  for (int c = -k; c < k; ++c) {
    evec[{c, c + 1}] = UExpression::gen(USymbol::E, c);
    fvec[{c, c + 1}] = UExpression::gen(USymbol::F, c);
  }
  for (int span = 2; span <= 2 * k; ++span) {
    for (int c = -k; c + span <= k; ++c) {
      const int d = c + span;
      if (top_extend) {
        const UExpression& elo = evec[{c, d - 1}];
        const UExpression& eg = evec[{d - 1, d}];
        evec[{c, d}] = eg * elo + (elo * eg).scaled(-Laurent::monomial(-1));
        const UExpression& flo = fvec[{c, d - 1}];
        const UExpression& fg = fvec[{d - 1, d}];
        fvec[{c, d}] = flo * fg + (fg * flo).scaled(-Laurent::q());
      } else {
        const UExpression& ehi = evec[{c + 1, d}];
        const UExpression& eg = evec[{c, c + 1}];
        evec[{c, d}] = eg * ehi + (ehi * eg).scaled(-Laurent::monomial(-1));
        const UExpression& fhi = fvec[{c + 1, d}];
        const UExpression& fg = fvec[{c, c + 1}];
        fvec[{c, d}] = fhi * fg + (fg * fhi).scaled(-Laurent::q());
      }
    }
  }
  ThetaFactorization th;
  th.k = k;
  th.word = word;
  const int n = static_cast<int>(word.size());
  for (int t = 1; t <= n; ++t) {
    ThetaPair p;
    p.letter = word[t - 1];
    std::tie(p.root_lo, p.root_hi) = root_of(word, t);
    p.e = evec.at({p.root_lo, p.root_hi});
    p.f = fvec.at({p.root_lo, p.root_hi});
    th.pairs.push_back(std::move(p));
  }
  return th;
}

}  // namespace

ThetaFactorization build_theta_nested(int k) {
  return assemble_theta(k, nested_word(k), /*top_extend=*/true);
}

ThetaFactorization build_theta_mirror(int k) {
  return assemble_theta(k, mirror_word(k), /*top_extend=*/false);
}

namespace {

std::map<int, std::unique_ptr<const ThetaFactorization>> g_theta_cache;
std::mutex g_theta_mutex;

// Per (k, slot type) single-factor images of every Fbeta_t (and Ebeta_t for
// the left peel): weight homogeneity makes each image a single matrix entry.
struct SingleSlotMaps {
  // maps[t][value + k] = (target value, coefficient); absent -> zero
  std::vector<std::vector<std::pair<int, Laurent>>> maps;
  std::vector<std::vector<bool>> present;
};

std::map<std::tuple<int, int, int>, std::unique_ptr<const SingleSlotMaps>> g_slot_cache;
std::mutex g_slot_mutex;

const SingleSlotMaps& single_slot_maps(const ThetaFactorization& th, int bit, bool fside) {
  std::lock_guard lock(g_slot_mutex);
  auto key = std::make_tuple(th.k, bit, fside ? 1 : 0);
  auto it = g_slot_cache.find(key);
  if (it != g_slot_cache.end()) return *it->second;
  auto maps = std::make_unique<SingleSlotMaps>();
  const int dim = 2 * th.k + 1;
  const ZeroOneSequence seq({bit});
  maps->maps.resize(th.pairs.size(), std::vector<std::pair<int, Laurent>>(dim));
  maps->present.resize(th.pairs.size(), std::vector<bool>(dim, false));
  for (size_t t = 0; t < th.pairs.size(); ++t) {
    const UExpression& x = fside ? th.pairs[t].f : th.pairs[t].e;
    for (int c = -th.k; c <= th.k; ++c) {
      FockVector img = evaluate(x, FockVector::monomial(seq, th.k, {c}));
      if (img.is_zero()) continue;
      if (img.terms().size() != 1)
        throw Error("root vector image is not a matrix entry");
      const auto& [g, coeff] = *img.terms().begin();
      maps->maps[t][c + th.k] = {g[0], coeff};
      maps->present[t][c + th.k] = true;
    }
  }
  auto [pos, ok] = g_slot_cache.emplace(key, std::move(maps));
  return *pos->second;
}

// Cached sparse images of Ebeta_t on left-space monomials.
struct LeftImageCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, Weight>, std::vector<std::pair<Weight, Laurent>>> images;
};

std::map<std::pair<int, std::string>, std::unique_ptr<LeftImageCache>> g_left_cache;
std::mutex g_left_mutex;

LeftImageCache& left_cache(int k, const std::string& sig) {
  std::lock_guard lock(g_left_mutex);
  auto& slot = g_left_cache[{k, sig}];
  if (!slot) slot = std::make_unique<LeftImageCache>();
  return *slot;
}

const std::vector<std::pair<Weight, Laurent>>& left_image(
    const ThetaFactorization& th, LeftImageCache& cache, const ZeroOneSequence& left_b,
    int t, const Weight& f) {
  const std::pair<int, Weight> key{t, f};
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.images.find(key);
    if (it != cache.images.end()) return it->second;
  }
  FockVector img = evaluate(th.pairs[t].e, FockVector::monomial(left_b, th.k, f));
  std::vector<std::pair<Weight, Laurent>> entries(img.terms().begin(), img.terms().end());
  std::unique_lock lock(cache.mutex);
  return cache.images.emplace(key, std::move(entries)).first->second;
}

}  // namespace

const ThetaFactorization& build_theta(int k) {
  std::lock_guard lock(g_theta_mutex);
  auto it = g_theta_cache.find(k);
  if (it != g_theta_cache.end()) return *it->second;
  auto [pos, ok] = g_theta_cache.emplace(
      k, std::make_unique<const ThetaFactorization>(build_theta_nested(k)));
  return *pos->second;
}

FockVector apply_theta(const ThetaFactorization& th, const FockVector& left,
                       int last_bit, int last_value) {
  if (left.level() != th.k)
    throw TruncationError("level mismatch between Theta and its argument");
  if (last_value < -th.k || last_value > th.k)
    throw TruncationError("last factor index outside the window");
  std::vector<int> bits = left.sequence().bits();
  bits.push_back(last_bit);
  const ZeroOneSequence full(bits);
  FockVector cur(full, th.k);
  for (const auto& [f, c] : left.terms()) {
    Weight g = f;
    g.push_back(last_value);
    cur.add_term(g, c);
  }
  const SingleSlotMaps& fmaps = single_slot_maps(th, last_bit, /*fside=*/true);
  LeftImageCache& cache = left_cache(th.k, left.sequence().str());
  for (size_t t = 0; t < th.pairs.size(); ++t) {
    FockVector delta(full, th.k);
    for (const auto& [f, c] : cur.terms()) {
      const int v = f.back();
      if (!fmaps.present[t][v + th.k]) continue;
      const auto& [v2, fc] = fmaps.maps[t][v + th.k];
      Weight fl(f.begin(), f.end() - 1);
      const auto& img = left_image(th, cache, left.sequence(), static_cast<int>(t), fl);
      const Laurent scale = c * fc * kQmQi;
      for (const auto& [g, ec] : img) {
        Weight whole = g;
        whole.push_back(v2);
        delta.add_term(whole, scale * ec);
      }
    }
    cur += delta;
  }
  return cur;
}

FockVector apply_theta_left(const ThetaFactorization& th, int first_bit,
                            int first_value, const FockVector& right) {
  if (right.level() != th.k)
    throw TruncationError("level mismatch between Theta and its argument");
  std::vector<int> bits{first_bit};
  for (int b : right.sequence().bits()) bits.push_back(b);
  const ZeroOneSequence full(bits);
  FockVector cur(full, th.k);
  for (const auto& [f, c] : right.terms()) {
    Weight g{first_value};
    g.insert(g.end(), f.begin(), f.end());
    cur.add_term(g, c);
  }
  const SingleSlotMaps& emaps = single_slot_maps(th, first_bit, /*fside=*/false);
  for (size_t t = 0; t < th.pairs.size(); ++t) {
    FockVector delta(full, th.k);
    for (const auto& [f, c] : cur.terms()) {
      const int v = f.front();
      if (!emaps.present[t][v + th.k]) continue;
      const auto& [v2, ec] = emaps.maps[t][v + th.k];
      Weight fr(f.begin() + 1, f.end());
      FockVector img =
          evaluate(th.pairs[t].f, FockVector::monomial(right.sequence(), th.k, fr));
      const Laurent scale = c * ec * kQmQi;
      for (const auto& [g, fc] : img.terms()) {
        Weight whole{v2};
        whole.insert(whole.end(), g.begin(), g.end());
        delta.add_term(whole, scale * fc);
      }
    }
    cur += delta;
  }
  return cur;
}

namespace {

struct PsiMemo {
  std::shared_mutex mutex;
  std::map<Weight, FockVector> values;
};

std::map<std::pair<std::string, int>, std::unique_ptr<PsiMemo>> g_psi_memo;
std::mutex g_psi_mutex;

PsiMemo& psi_memo(const ZeroOneSequence& b, int k) {
  std::lock_guard lock(g_psi_mutex);
  auto& slot = g_psi_memo[{b.str(), k}];
  if (!slot) slot = std::make_unique<PsiMemo>();
  return *slot;
}

FockVector psi_monomial(const ZeroOneSequence& b, int k, const Weight& f) {
  if (b.size() == 1) return FockVector::monomial(b, k, f);
  PsiMemo& memo = psi_memo(b, k);
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(f);
    if (it != memo.values.end()) return it->second;
  }
  std::vector<int> prefix_bits(b.bits().begin(), b.bits().end() - 1);
  const ZeroOneSequence left_b(prefix_bits);
  const Weight left_f(f.begin(), f.end() - 1);
  FockVector left_psi = psi_monomial(left_b, k, left_f);
  FockVector value = apply_theta(build_theta(k), left_psi, b.bit(b.size()), f.back());
  std::unique_lock lock(memo.mutex);
  return memo.values.emplace(f, std::move(value)).first->second;
}

FockVector psi_monomial_left(const ZeroOneSequence& b, int k, const Weight& f) {
  if (b.size() == 1) return FockVector::monomial(b, k, f);
  std::vector<int> suffix_bits(b.bits().begin() + 1, b.bits().end());
  const ZeroOneSequence right_b(suffix_bits);
  const Weight right_f(f.begin() + 1, f.end());
  FockVector right_psi = psi_monomial_left(right_b, k, right_f);
  return apply_theta_left(build_theta(k), b.bit(1), f.front(), right_psi);
}

}  // namespace

FockVector bar_involution(const FockVector& u) {
  FockVector r(u.sequence(), u.level());
  for (const auto& [f, c] : u.terms())
    r += psi_monomial(u.sequence(), u.level(), f).scaled(c.bar());
  return r;
}

FockVector bar_involution_left_peel(const FockVector& u) {
  FockVector r(u.sequence(), u.level());
  for (const auto& [f, c] : u.terms())
    r += psi_monomial_left(u.sequence(), u.level(), f).scaled(c.bar());
  return r;
}

void clear_rmatrix_caches() {
  {
    std::lock_guard lock(g_theta_mutex);
    g_theta_cache.clear();
  }
  {
    std::lock_guard lock(g_slot_mutex);
    g_slot_cache.clear();
  }
  {
    std::lock_guard lock(g_left_mutex);
    g_left_cache.clear();
  }
  {
    std::lock_guard lock(g_psi_mutex);
    g_psi_memo.clear();
  }
}

std::vector<ThetaDumpRecord> theta_dump(const ThetaFactorization& th) {
  std::vector<ThetaDumpRecord> out;
  for (size_t t = 0; t < th.pairs.size(); ++t)
    out.push_back({static_cast<int>(t + 1), th.pairs[t].letter, th.pairs[t].e.str(),
                   th.pairs[t].f.str()});
  return out;
}

}  // namespace bkl
