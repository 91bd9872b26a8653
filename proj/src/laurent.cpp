#include "bkl/laurent.hpp"

#include <cctype>
#include <sstream>

namespace bkl {

Laurent Laurent::from_int(Int c) {
  Laurent p;
  if (c != 0) p.terms_[0] = std::move(c);
  return p;
}

Laurent Laurent::monomial(int e, Int c) {
  Laurent p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

Laurent Laurent::neg_q_pow(int e) {
  return monomial(e, (e % 2 == 0) ? Int(1) : Int(-1));
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int Laurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw DomainError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw DomainError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void Laurent::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r;
  for (const auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
  return r;
}

Int Laurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Laurent::in_qZq() const {
  return terms_.empty() || terms_.begin()->first >= 1;
}

bool Laurent::in_qinvZqinv() const {
  return terms_.empty() || terms_.rbegin()->first <= -1;
}

bool Laurent::nonneg_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Laurent::nonneg_in_q() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || c < 0) return false;
  return true;
}

bool Laurent::nonneg_in_neg_qinv() const {
  for (const auto& [e, c] : terms_) {
    if (e > 0) return false;
    Int x = (e % 2 == 0) ? c : -c;
    if (x < 0) return false;
  }
  return true;
}

Laurent quantum_integer(int r) {
  if (r <= 0) throw DomainError("quantum_integer requires r >= 1");
  Laurent p;
  for (int e = 1 - r; e <= r - 1; e += 2) p.add_term(e, 1);
  return p;
}

Laurent quantum_factorial(int r) {
  if (r <= 0) throw DomainError("quantum_factorial requires r >= 1");
  Laurent p = Laurent::one();
  for (int i = 1; i <= r; ++i) p *= quantum_integer(i);
  return p;
}

static void require_bar_antisymmetric(const Laurent& c) {
  if (c.bar() != -c)
    throw BarAntisymmetryError("expected bar(c) = -c, got c = " + c.str());
}

Laurent positive_solve(const Laurent& c) {
  require_bar_antisymmetric(c);
  Laurent t;
  for (const auto& [e, v] : c.terms())
    if (e > 0) t.add_term(e, v);
  return t;
}

Laurent negative_solve(const Laurent& c) {
  require_bar_antisymmetric(c);
  Laurent t;
  for (const auto& [e, v] : c.terms())
    if (e < 0) t.add_term(e, v);
  return t;
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw ExactDivisionError("division by zero");
  if (a.is_zero()) return Laurent();
  Laurent rem = a;
  Laurent quot;
  const int blead = b.max_exp();
  const Int bc = b.coeff(blead);
  while (!rem.is_zero()) {
    const int e = rem.max_exp();
    const Int c = rem.coeff(e);
    if (c % bc != 0)
      throw ExactDivisionError("non-exact division: " + a.str() + " / " + b.str());
    Laurent t = Laurent::monomial(e - blead, c / bc);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // decreasing exponent order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Int c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    if (e == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      if (e == 1)
        out << "q";
      else
        out << "q^" << e;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
};

Int parse_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.i;
  size_t digits = c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == digits) throw ParseError("expected integer at position " + std::to_string(start));
  return Int(c.s.substr(start, c.i - start));
}

}  // namespace

Laurent Laurent::parse(const std::string& s) {
  Laurent result;
  Cursor c{s};
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(c.i));
    }
    first = false;
    c.skip_ws();
    Int coeff = 1;
    bool have_coeff = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_int(c);
      have_coeff = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        c.skip_ws();
      } else if (!c.done() && c.peek() == 'q') {
        throw ParseError("expected '*' between coefficient and q at position " +
                         std::to_string(c.i));
      }
    }
    int e = 0;
    if (!c.done() && c.peek() == 'q') {
      ++c.i;
      e = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        Int ee = parse_int(c);
        e = static_cast<int>(ee);
      }
    } else if (!have_coeff) {
      throw ParseError("expected term at position " + std::to_string(c.i));
    }
    result.add_term(e, sign * coeff);
  }
  return result;
}

}  // namespace bkl
