#include "bkl/canonical.hpp"

#include <algorithm>

namespace bkl {

Laurent BKLTable::entry(const Weight& g, const Weight& f) const {
  auto it = entries.find({g, f});
  return it == entries.end() ? Laurent() : it->second;
}

namespace {

// Lower set of f inside the window, sorted ascending in the linear
// extension (rank, then lex); f is last.
std::vector<Weight> lower_set(const ZeroOneSequence& b, int k, const Weight& f) {
  std::vector<Weight> lower;
  for (const Weight& h : weight_class(b, f, k))
    if (bruhat_leq(b, h, f)) lower.push_back(h);
  sort_by_bruhat_rank(b, k, lower);
  return lower;
}

FockVector solve_column(const ZeroOneSequence& b, int k, const Weight& f,
                        BasisKind kind) {
  const std::vector<Weight> lower = lower_set(b, k, f);
  std::map<Weight, FockVector> psi;
  for (const Weight& h : lower)
    psi.emplace(h, bar_involution(FockVector::monomial(b, k, h)));

  std::map<Weight, Laurent> coeff;
  coeff[f] = Laurent::one();
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    const Weight& g = *it;
    if (g == f) continue;
    Laurent c;
    for (const auto& [h, t] : coeff) c += coefficient(psi.at(h), g) * t.bar();
    coeff[g] = (kind == BasisKind::Canonical) ? positive_solve(c) : negative_solve(c);
  }

  FockVector result(b, k);
  for (const auto& [g, c] : coeff) result.add_term(g, c);
  FockVector barred(b, k);
  for (const auto& [g, c] : coeff) barred += psi.at(g).scaled(c.bar());
  if (!(barred == result))
    throw Error("solved element is not bar-invariant; broken bar matrix");
  return result;
}

int start_level(const Weight& f) {
  int r = 0;
  for (int v : f) r = std::max(r, std::abs(v));
  return std::max(2, r + 1);
}

}  // namespace

std::map<std::pair<Weight, Weight>, Laurent> bar_matrix(const ZeroOneSequence& b,
                                                        int k, const Weight& f) {
  std::map<std::pair<Weight, Weight>, Laurent> r;
  for (const Weight& h : lower_set(b, k, f)) {
    FockVector psi = bar_involution(FockVector::monomial(b, k, h));
    for (const auto& [g, c] : psi.terms()) r[{g, h}] = c;
  }
  return r;
}

FockVector canonical_element(const ZeroOneSequence& b, int k, const Weight& f) {
  return solve_column(b, k, f, BasisKind::Canonical);
}

FockVector dual_canonical_element(const ZeroOneSequence& b, int k, const Weight& f) {
  return solve_column(b, k, f, BasisKind::Dual);
}

FockVector stabilized_canonical(const ZeroOneSequence& b, const Weight& f,
                                int level_cap) {
  int k = start_level(f);
  if (k > level_cap)
    throw StabilizationCapError("start level " + std::to_string(k) +
                                " already above the cap " + std::to_string(level_cap));
  FockVector cur = canonical_element(b, k, f);
  while (true) {
    if (cur.support_radius() < k) {
      if (k + 2 > level_cap)
        throw StabilizationCapError("level cap " + std::to_string(level_cap) +
                                    " reached before stabilization of " + weight_str(f));
      FockVector next = canonical_element(b, k + 2, f);
      if (next.terms() == cur.terms()) return next;
      cur = std::move(next);
      k += 2;
    } else {
      if (k + 2 > level_cap)
        throw StabilizationCapError("level cap " + std::to_string(level_cap) +
                                    " reached before stabilization of " + weight_str(f));
      k += 2;
      cur = canonical_element(b, k, f);
    }
  }
}

FockVector stabilized_dual_truncation(const ZeroOneSequence& b, const Weight& f, int k) {
  return dual_canonical_element(b, k, f);
}

FockVector wedge_canonical(const ZeroOneSequence& b, int k, const Weight& f) {
  if (!is_dominant(b, f))
    throw DominanceError("wedge index " + weight_str(f) + " is not dominant");
  return h0_act(canonical_element(b, k, apply_perm(f, longest_element(b))));
}

std::map<Weight, Laurent> wedge_bkl(const ZeroOneSequence& b, int k, const Weight& f) {
  return k_basis_decompose(wedge_canonical(b, k, f));
}

std::map<std::pair<Weight, Weight>, Laurent> wedge_bar_matrix(const ZeroOneSequence& b,
                                                              int k, const Weight& f) {
  if (!is_dominant(b, f))
    throw DominanceError("wedge index " + weight_str(f) + " is not dominant");
  std::map<std::pair<Weight, Weight>, Laurent> r;
  for (const Weight& h : lower_set(b, k, f)) {
    if (!is_dominant(b, h)) continue;
    auto coords = k_basis_decompose(bar_involution(k_expand(b, k, h)));
    for (const auto& [g, c] : coords) r[{g, h}] = c;
  }
  return r;
}

FockVector wedge_canonical_solved(const ZeroOneSequence& b, int k, const Weight& f) {
  auto s = wedge_bar_matrix(b, k, f);
  std::vector<Weight> lower;
  for (const Weight& h : lower_set(b, k, f))
    if (is_dominant(b, h)) lower.push_back(h);

  std::map<Weight, Laurent> coeff;
  coeff[f] = Laurent::one();
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    const Weight& g = *it;
    if (g == f) continue;
    Laurent c;
    for (const auto& [h, u] : coeff) {
      auto entry = s.find({g, h});
      if (entry != s.end()) c += entry->second * u.bar();
    }
    coeff[g] = positive_solve(c);
  }
  FockVector result(b, k);
  for (const auto& [g, c] : coeff) result += k_expand(b, k, g).scaled(c);
  return result;
}

std::map<Weight, Laurent> wedge_dual_coords(const ZeroOneSequence& b, int k,
                                            const Weight& f) {
  auto s = wedge_bar_matrix(b, k, f);
  std::vector<Weight> lower;
  for (const Weight& h : lower_set(b, k, f))
    if (is_dominant(b, h)) lower.push_back(h);

  std::map<Weight, Laurent> coeff;
  coeff[f] = Laurent::one();
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    const Weight& g = *it;
    if (g == f) continue;
    Laurent c;
    for (const auto& [h, u] : coeff) {
      auto entry = s.find({g, h});
      if (entry != s.end()) c += entry->second * u.bar();
    }
    coeff[g] = negative_solve(c);
  }
  return coeff;
}

namespace {

std::vector<Weight> window_weights(const ZeroOneSequence& b, int k) {
  std::vector<Weight> all;
  Weight cur(b.size(), -k);
  while (true) {
    all.push_back(cur);
    size_t i = 0;
    while (i < cur.size() && cur[i] == k) cur[i++] = -k;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return all;
}

BKLTable build_table(const ZeroOneSequence& b, int k, BasisKind kind, bool parallel) {
  std::map<IntegralWeight, std::vector<Weight>> classes;
  for (Weight& f : window_weights(b, k)) classes[wt(b, f)].push_back(std::move(f));

  BKLTable table{b, k, kind, {}};
  for (auto& [w, members] : classes) {
    // Shared bar data for the class lives in the psi memo; warm it serially,
    // then the per-f solves only read.
    for (const Weight& h : members) bar_involution(FockVector::monomial(b, k, h));
    std::vector<std::map<std::pair<Weight, Weight>, Laurent>> columns(members.size());
    const int n = static_cast<int>(members.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
      FockVector col = solve_column(b, k, members[i], kind);
      for (const auto& [g, c] : col.terms()) columns[i][{g, members[i]}] = c;
    }
    for (auto& col : columns)
      for (auto& [key, c] : col) table.entries.emplace(key, std::move(c));
  }
  return table;
}

}  // namespace

BKLTable build_table_serial(const ZeroOneSequence& b, int k, BasisKind kind) {
  return build_table(b, k, kind, false);
}

BKLTable build_table_parallel(const ZeroOneSequence& b, int k, BasisKind kind) {
  return build_table(b, k, kind, true);
}

}  // namespace bkl
