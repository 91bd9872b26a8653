#include "bkl/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bkl {

void IntegralWeight::add(int a, long long mult) {
  if (mult == 0) return;
  auto it = e_.find(a);
  if (it == e_.end()) {
    e_.emplace(a, mult);
  } else {
    it->second += mult;
    if (it->second == 0) e_.erase(it);
  }
}

long long IntegralWeight::mult(int a) const {
  auto it = e_.find(a);
  return it == e_.end() ? 0 : it->second;
}

std::string IntegralWeight::str() const {
  if (e_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : e_) {
    if (!first) out << (c > 0 ? "+" : "");
    first = false;
    if (c == -1)
      out << "-";
    else if (c != 1)
      out << c << "*";
    out << "e(" << a << ")";
  }
  return out.str();
}

ZeroOneSequence::ZeroOneSequence(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DomainError("empty 0/1 sequence");
  for (int x : bits_) {
    if (x == 0)
      ++m_;
    else if (x == 1)
      ++n_;
    else
      throw DomainError("sequence entries must be 0 or 1");
  }
  for (size_t i = 1; i < bits_.size(); ++i)
    if (bits_[i] != bits_[i - 1]) ends_.push_back(static_cast<int>(i));
  ends_.push_back(static_cast<int>(bits_.size()));
}

ZeroOneSequence ZeroOneSequence::parse(const std::string& s) {
  std::vector<int> bits;
  for (char c : s) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      throw ParseError(std::string("bad sequence character '") + c + "'");
  }
  return ZeroOneSequence(std::move(bits));
}

int ZeroOneSequence::block_of(int pos) const {
  for (int j = 1; j <= block_count(); ++j)
    if (pos <= ends_[j - 1]) return j;
  throw DomainError("slot out of range");
}

bool ZeroOneSequence::is_block_boundary(int pos) const {
  for (int j = 0; j + 1 < static_cast<int>(ends_.size()); ++j)
    if (ends_[j] == pos) return true;
  return false;
}

std::string ZeroOneSequence::str() const {
  std::string s;
  for (int x : bits_) s += static_cast<char>('0' + x);
  return s;
}

bool ZeroOneSequence::is_standard() const {
  for (int i = 1; i <= size(); ++i)
    if (bit(i) != (i <= n_ ? 1 : 0)) return false;
  return true;
}

SlotPerm identity_perm(int size) {
  SlotPerm p(size);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Weight apply_perm(const Weight& f, const SlotPerm& x) {
  Weight r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[x[i] - 1];
  return r;
}

SlotPerm compose(const SlotPerm& x, const SlotPerm& y) {
  SlotPerm r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[y[i] - 1];
  return r;
}

int perm_length(const SlotPerm& x) {
  int inv = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] > x[j]) ++inv;
  return inv;
}

SlotPerm longest_element(const ZeroOneSequence& b) {
  SlotPerm p = identity_perm(b.size());
  for (int j = 1; j <= b.block_count(); ++j)
    std::reverse(p.begin() + (b.block_start(j) - 1), p.begin() + b.block_end(j));
  return p;
}

std::vector<SlotPerm> parabolic_group(const ZeroOneSequence& b) {
  std::vector<SlotPerm> result{identity_perm(b.size())};
  for (int j = 1; j <= b.block_count(); ++j) {
    const int lo = b.block_start(j), hi = b.block_end(j);
    std::vector<int> block(hi - lo + 1);
    std::iota(block.begin(), block.end(), lo);
    std::vector<SlotPerm> grown;
    do {
      for (const SlotPerm& base : result) {
        SlotPerm p = base;
        for (int i = lo; i <= hi; ++i) p[i - 1] = block[i - lo];
        grown.push_back(std::move(p));
      }
    } while (std::next_permutation(block.begin(), block.end()));
    result = std::move(grown);
  }
  return result;
}

IntegralWeight wt_prefix(const ZeroOneSequence& b, const Weight& f, int j) {
  if (j < 1 || j > b.size()) throw DomainError("wt_prefix index out of range");
  IntegralWeight w;
  for (int i = j; i <= b.size(); ++i)
    w.add(f[i - 1], b.bit(i) == 0 ? 1 : -1);
  return w;
}

IntegralWeight wt(const ZeroOneSequence& b, const Weight& f) {
  return wt_prefix(b, f, 1);
}

bool dominance_leq(const IntegralWeight& x, const IntegralWeight& y) {
  long long partial = 0;
  IntegralWeight diff = y;
  for (const auto& [a, c] : x.entries()) diff.add(a, -c);
  for (const auto& [a, c] : diff.entries()) partial += c;
  if (partial != 0) return false;
  partial = 0;
  for (const auto& [a, c] : diff.entries()) {
    partial += c;
    // partial sums over a' <= a must stay >= 0; entries() is sorted by a and
    // the running value is constant between attained indices.
    if (partial < 0) return false;
  }
  return true;
}

long long sharp(const ZeroOneSequence& b, const Weight& h, int a, int j) {
  long long s = 0;
  for (int i = j; i <= b.size(); ++i)
    if (h[i - 1] <= a) s += (b.bit(i) == 0 ? 1 : -1);
  return s;
}

bool bruhat_leq(const ZeroOneSequence& b, const Weight& g, const Weight& f) {
  if (g.size() != f.size() || static_cast<int>(g.size()) != b.size())
    throw DomainError("length mismatch in bruhat_leq");
  // The sharp statistics are step functions of a, changing only at values
  // attained by g or f, so those values suffice.
  std::set<int> values(g.begin(), g.end());
  values.insert(f.begin(), f.end());
  for (int a : values) {
    if (sharp(b, g, a, 1) != sharp(b, f, a, 1)) return false;
    for (int j = 2; j <= b.size(); ++j)
      if (sharp(b, g, a, j) > sharp(b, f, a, j)) return false;
  }
  return true;
}

namespace {

// Recursive enumeration of Z^{m+n}_k slot by slot, pruning on the remaining
// weight deficit: one slot can move a single eps-coordinate by one.
void scan_class(const ZeroOneSequence& b, int k, int slot, Weight& cur,
                IntegralWeight& remaining, std::vector<Weight>& out) {
  const int total = b.size();
  if (slot > total) {
    if (remaining.is_zero()) out.push_back(cur);
    return;
  }
  long long deficit = 0;
  for (const auto& [a, c] : remaining.entries()) deficit += std::llabs(c);
  if (deficit > total - slot + 1) return;
  const int sign = b.bit(slot) == 0 ? 1 : -1;
  for (int v = -k; v <= k; ++v) {
    cur[slot - 1] = v;
    remaining.add(v, -sign);
    scan_class(b, k, slot + 1, cur, remaining, out);
    remaining.add(v, sign);
  }
}

}  // namespace

std::vector<Weight> weight_class(const ZeroOneSequence& b, const Weight& f, int k) {
  for (int v : f)
    if (v < -k || v > k) throw TruncationError("weight function outside level-" +
                                               std::to_string(k) + " window");
  IntegralWeight target = wt(b, f);
  std::vector<Weight> out;
  Weight cur(b.size(), 0);
  scan_class(b, k, 1, cur, target, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> interval(const ZeroOneSequence& b, const Weight& g,
                             const Weight& f, int k) {
  if (!bruhat_leq(b, g, f))
    throw EmptyIntervalError("interval requested with g not <= f");
  std::vector<Weight> out;
  for (const Weight& h : weight_class(b, f, k))
    if (bruhat_leq(b, g, h) && bruhat_leq(b, h, f)) out.push_back(h);
  return out;
}

bool is_dominant(const ZeroOneSequence& b, const Weight& f) {
  for (int j = 1; j <= b.block_count(); ++j) {
    const int sign = b.bit(b.block_start(j)) == 0 ? 1 : -1;
    for (int i = b.block_start(j); i < b.block_end(j); ++i)
      if (sign * f[i - 1] <= sign * f[i]) return false;
  }
  return true;
}

bool is_antidominant(const ZeroOneSequence& b, const Weight& f) {
  for (int j = 1; j <= b.block_count(); ++j) {
    const int sign = b.bit(b.block_start(j)) == 0 ? 1 : -1;
    for (int i = b.block_start(j); i < b.block_end(j); ++i)
      if (sign * f[i - 1] > sign * f[i]) return false;
  }
  return true;
}

MinimalRep minimal_antidominant_rep(const ZeroOneSequence& b, const Weight& f) {
  SlotPerm x = identity_perm(b.size());
  for (int j = 1; j <= b.block_count(); ++j) {
    const int sign = b.bit(b.block_start(j)) == 0 ? 1 : -1;
    auto lo = x.begin() + (b.block_start(j) - 1), hi = x.begin() + b.block_end(j);
    std::stable_sort(lo, hi, [&](int p, int q) {
      return sign * f[p - 1] < sign * f[q - 1];
    });
  }
  return MinimalRep{x, perm_length(x)};
}

ZeroOneSequence s_kappa_seq(const ZeroOneSequence& b, int kappa) {
  if (kappa < 1 || kappa + 1 > b.size() || b.bit(kappa) != 0 || b.bit(kappa + 1) != 1)
    throw SequencePatternError("s_kappa_seq needs (b_k, b_{k+1}) = (0,1) at kappa=" +
                               std::to_string(kappa));
  std::vector<int> bits = b.bits();
  std::swap(bits[kappa - 1], bits[kappa]);
  return ZeroOneSequence(std::move(bits));
}

Weight s_kappa_f(const Weight& f, int kappa) {
  if (kappa < 1 || kappa + 1 > static_cast<int>(f.size()))
    throw DomainError("s_kappa_f index out of range");
  Weight r = f;
  if (r[kappa - 1] == r[kappa]) {
    ++r[kappa - 1];
    ++r[kappa];
  } else {
    std::swap(r[kappa - 1], r[kappa]);
  }
  return r;
}

Weight s_kappa_f_inverse(const Weight& f, int kappa) {
  if (kappa < 1 || kappa + 1 > static_cast<int>(f.size()))
    throw DomainError("s_kappa_f_inverse index out of range");
  Weight r = f;
  if (r[kappa - 1] == r[kappa]) {
    --r[kappa - 1];
    --r[kappa];
  } else {
    std::swap(r[kappa - 1], r[kappa]);
  }
  return r;
}

std::vector<int> bst_factorization(const ZeroOneSequence& b) {
  std::vector<int> ones;
  for (int i = 1; i <= b.size(); ++i)
    if (b.bit(i) == 1) ones.push_back(i);
  const int n = static_cast<int>(ones.size());
  int l = n + 1;
  for (int j = 1; j <= n; ++j) {
    if (ones[j - 1] != j) {
      l = j;
      break;
    }
  }
  std::vector<int> word;
  for (int j = n; j >= l; --j)
    for (int kappa = j; kappa <= ones[j - 1] - 1; ++kappa) word.push_back(kappa);
  return word;
}

long long bruhat_rank(const ZeroOneSequence& b, const Weight& f, int k) {
  long long r = 0;
  for (int a = -k; a <= k; ++a)
    for (int j = 1; j <= b.size(); ++j) r += sharp(b, f, a, j);
  return r;
}

void sort_by_bruhat_rank(const ZeroOneSequence& b, int k, std::vector<Weight>& ws) {
  std::vector<std::pair<long long, Weight>> keyed;
  keyed.reserve(ws.size());
  for (auto& w : ws) keyed.emplace_back(bruhat_rank(b, w, k), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  ws.clear();
  for (auto& [r, w] : keyed) ws.push_back(std::move(w));
}

std::string weight_str(const Weight& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ",";
    out << f[i];
  }
  return out.str();
}

Weight parse_weight(const std::string& s) {
  Weight f;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used])))
        ++used;
      if (used != part.size()) throw std::invalid_argument(part);
      f.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad weight entry '" + part + "'");
    }
  }
  if (f.empty()) throw ParseError("empty weight function");
  return f;
}

}  // namespace bkl
