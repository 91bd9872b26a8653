#include "bkl/uexpr.hpp"

#include <sstream>

namespace bkl {

UExpression UExpression::term(UWord w, Laurent c) {
  UExpression x;
  x.add(w, c);
  return x;
}

UExpression UExpression::gen(USymbol::Kind kind, int a) {
  return term({USymbol{kind, a}});
}

void UExpression::add(const UWord& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = words_.find(w);
  if (it == words_.end()) {
    words_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) words_.erase(it);
  }
}

UExpression& UExpression::operator+=(const UExpression& o) {
  for (const auto& [w, c] : o.words_) add(w, c);
  return *this;
}

UExpression operator*(const UExpression& a, const UExpression& b) {
  UExpression r;
  for (const auto& [wa, ca] : a.words()) {
    for (const auto& [wb, cb] : b.words()) {
      UWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  }
  return r;
}

UExpression UExpression::scaled(const Laurent& c) const {
  UExpression r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : words_) r.words_.emplace(w, v * c);
  return r;
}

std::string UExpression::str() const {
  if (words_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : words_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (const USymbol& s : w) {
      switch (s.kind) {
        case USymbol::E: out << "*E(" << s.a << ")"; break;
        case USymbol::F: out << "*F(" << s.a << ")"; break;
        case USymbol::K: out << "*K(" << s.a << ")"; break;
        case USymbol::Kinv: out << "*K(" << s.a << ")^-1"; break;
      }
    }
  }
  return out.str();
}

namespace {

const Laurent kQ = Laurent::q();
const Laurent kQinv = Laurent::monomial(-1);

// Image of a single generator under T_a, straight from the defining tables.
UExpression braid_image(int a, const USymbol& s) {
  switch (s.kind) {
    case USymbol::E: {
      const int b = s.a;
      if (b == a)
        return UExpression::term({{USymbol::K, a + 1}, {USymbol::Kinv, a}, {USymbol::F, a}},
                                 Laurent::from_int(-1));
      if (b == a + 1 || b == a - 1) {
        UExpression r = UExpression::term({{USymbol::E, b}, {USymbol::E, a}});
        r += UExpression::term({{USymbol::E, a}, {USymbol::E, b}}, -kQinv);
        return r;
      }
      return UExpression::gen(USymbol::E, b);
    }
    case USymbol::F: {
      const int b = s.a;
      if (b == a)
        return UExpression::term({{USymbol::E, a}, {USymbol::K, a}, {USymbol::Kinv, a + 1}},
                                 Laurent::from_int(-1));
      if (b == a + 1 || b == a - 1) {
        UExpression r = UExpression::term({{USymbol::F, a}, {USymbol::F, b}});
        r += UExpression::term({{USymbol::F, b}, {USymbol::F, a}}, -kQ);
        return r;
      }
      return UExpression::gen(USymbol::F, b);
    }
    case USymbol::K:
    case USymbol::Kinv: {
      int b = s.a;
      if (b == a + 1)
        b = a;
      else if (b == a)
        b = a + 1;
      return UExpression::gen(s.kind, b);
    }
  }
  return {};
}

}  // namespace

UExpression braid_T(int a, const UExpression& x) {
  UExpression result;
  for (const auto& [w, c] : x.words()) {
    UExpression prod = UExpression::term({}, c);
    for (const USymbol& s : w) prod = prod * braid_image(a, s);
    result += prod;
  }
  return result;
}

FockVector evaluate(const UExpression& x, const FockVector& u) {
  FockVector total(u.sequence(), u.level());
  for (const auto& [w, c] : x.words()) {
    FockVector v = u;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (v.is_zero()) break;
      switch (it->kind) {
        case USymbol::E: v = act_E(it->a, v); break;
        case USymbol::F: v = act_F(it->a, v); break;
        case USymbol::K: v = act_K(it->a, v); break;
        case USymbol::Kinv: v = act_K_inv(it->a, v); break;
      }
    }
    total += v.scaled(c);
  }
  return total;
}

}  // namespace bkl
