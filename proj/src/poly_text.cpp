#include <cctype>
#include <string>

#include "charp/error.hpp"
#include "charp/poly.hpp"

namespace charp {

// ---------------------------------------------------------------- printing

std::string coefficient_text(const Coefficient& c) { return c.to_string(); }

static std::string monomial_text(const Monomial& m, const VarTable& vt) {
  std::string s;
  for (int i = 0; i < vt.size(); ++i) {
    const int e = m[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += vt.name(i);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string c = t.c.to_string();
    const bool compound = c.find('+') != std::string::npos || c.find('/') != std::string::npos;
    if (t.m.is_one()) {
      out += (c.find('+') != std::string::npos && t.c.is_integral()) ? "(" + c + ")" : c;
      continue;
    }
    const std::string m = monomial_text(t.m, *vt_);
    if (t.c.is_one())
      out += m;
    else if (compound)
      out += "(" + c + ")*" + m;
    else
      out += c + "*" + m;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

// Values during parsing: either a bare coefficient (no table) or a polynomial.
struct Value {
  bool is_poly = false;
  Coefficient c;
  MultiPoly f;
};

class Parser {
 public:
  Parser(std::string_view text, VarTablePtr vt, unsigned p) : s_(text), vt_(std::move(vt)), p_(p) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value lift(const Value& v) const {
    if (v.is_poly) return v;
    if (!vt_) return v;
    return Value{true, {}, MultiPoly::constant(vt_, v.c)};
  }

  Value combine(const Value& a, const Value& b, char op) {
    if (!a.is_poly && !b.is_poly) {
      switch (op) {
        case '+': return Value{false, a.c + b.c, {}};
        case '-': return Value{false, a.c - b.c, {}};
        case '*': return Value{false, a.c * b.c, {}};
        default: break;
      }
    }
    Value x = lift(a), y = lift(b);
    switch (op) {
      case '+': return Value{true, {}, x.f + y.f};
      case '-': return Value{true, {}, x.f - y.f};
      case '*': return Value{true, {}, x.f * y.f};
      default: break;
    }
    error("bad operator");
  }

  Value divide(const Value& a, const Value& b) {
    if (!b.is_poly || b.f.is_constant()) {
      Coefficient d = b.is_poly ? b.f.constant_term() : b.c;
      if (d.is_zero()) error("division by zero");
      if (!a.is_poly) return Value{false, a.c / d, {}};
      return Value{true, {}, a.f.scaled(d.inv())};
    }
    // division by a unit monomial in invertible variables
    if (b.f.size() == 1) {
      Value inv = power(b, -1);
      return combine(a, inv, '*');
    }
    error("division by a non-constant polynomial");
  }

  Value power(const Value& base, long e) {
    if (!base.is_poly) {
      if (e < 0 && base.c.is_zero()) error("negative power of zero");
      return Value{false, base.c.pow(e), {}};
    }
    if (e >= 0) return Value{true, {}, pow(base.f, e)};
    if (base.f.size() != 1) error("negative power of a non-monomial");
    const Term& t = base.f.leading();
    for (int i = 0; i < vt_->size(); ++i)
      if (t.m[i] != 0 && !vt_->invertible(i)) error("negative power of non-invertible " + vt_->name(i));
    Monomial m = mono_pow(t.m, static_cast<int>(e));
    return Value{true, {}, MultiPoly::monomial(vt_, m, t.c.pow(e))};
  }

  Value expr() {
    skip_ws();
    Value v;
    if (accept('-')) {
      Value t = term();
      v = combine(Value{false, Coefficient::zero(p_), {}}, t, '-');
    } else {
      accept('+');
      v = term();
    }
    for (;;) {
      if (accept('+'))
        v = combine(v, term(), '+');
      else if (accept('-'))
        v = combine(v, term(), '-');
      else
        return v;
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (accept('*'))
        v = combine(v, factor(), '*');
      else if (accept('/'))
        v = divide(v, factor());
      else
        return v;
    }
  }

  long exponent() {
    skip_ws();
    bool paren = accept('(');
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (pos_ - start > 6) error("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) error("expected ')'");
    return neg ? -e : e;
  }

  Value factor() {
    Value base = atom();
    if (accept('^')) return power(base, exponent());
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (ch == '-') {
      ++pos_;
      Value v = factor();
      return combine(Value{false, Coefficient::zero(p_), {}}, v, '-');
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string digits(s_.substr(start, pos_ - start));
      long v = 0;
      for (char d : digits) v = (v * 10 + (d - '0')) % static_cast<long>(p_);
      return Value{false, Coefficient(v, p_), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "u") return Value{false, Coefficient::u_pow(1, p_), {}};
      if (!vt_) {
        pos_ = start;
        error("unknown symbol " + name);
      }
      const int idx = vt_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        error("unknown variable " + name);
      }
      return Value{true, {}, MultiPoly::var(vt_, idx)};
    }
    error("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  VarTablePtr vt_;
  unsigned p_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarTablePtr& vt) {
  Parser ps(text, vt, vt->prime());
  Value v = ps.parse_all();
  if (!v.is_poly) return MultiPoly::constant(vt, v.c);
  return v.f;
}

Coefficient parse_coefficient(std::string_view text, unsigned p) {
  require_prime(p);
  Parser ps(text, nullptr, p);
  return ps.parse_all().c;
}

}  // namespace charp
