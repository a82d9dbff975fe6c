#include "k3br/literal.hpp"

#include <cctype>
#include <sstream>

#include "k3br/errors.hpp"
#include "k3br/ideal.hpp"

namespace k3br {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return base_ + i_; }
  std::size_t raw() const { return i_; }

  std::string digits() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return std::string(s_.substr(start, i_ - start));
  }

  long signed_int() {
    const bool neg = accept('-');
    if (!neg) accept('+');
    const std::string d = digits();
    try {
      const long v = std::stol(d);
      return neg ? -v : v;
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    const std::size_t end = std::min(s_.size(), i_ + 8);
    throw ParseError(msg, pos(), i_ < s_.size() ? std::string(s_.substr(i_, end - i_)) : std::string("<end>"));
  }

  [[noreturn]] void fail_at(std::size_t raw_pos, const std::string& msg) {
    i_ = raw_pos;
    fail(msg);
  }

  std::string_view rest_until(char close) {
    const std::size_t start = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == close) {
        if (depth == 0) return s_.substr(start, i_ - start);
        --depth;
      }
      ++i_;
    }
    i_ = start > 0 ? start - 1 : start;  // at the opening bracket
    fail(std::string("unterminated group, missing '") + close + "'");
  }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t i_ = 0;
};

PrimeTag tag_from_char(Cursor& cur, char c) {
  switch (c) {
    case 'r': return PrimeTag::Ramified;
    case 'i': return PrimeTag::Inert;
    case 's': return PrimeTag::SplitFirst;
    case 't': return PrimeTag::SplitConj;
    default: cur.fail("unknown prime tag (expected r, i, s or t)");
  }
}

// Parses "a", "a/b", "a*w", "a/b*w", "w" terms joined by + and -.
FieldElement parse_linear(const ImQuadField& E, Cursor& cur) {
  Rational x = 0, y = 0;
  bool first = true;
  while (!cur.done()) {
    long sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (!cur.accept('+') && !first) cur.fail("expected '+' or '-'");
    first = false;
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = Rational(Integer(cur.digits()));
      if (cur.accept('/')) {
        cur.skip_ws();
        const std::size_t at = cur.raw();
        const Integer den(cur.digits());
        if (den == 0) cur.fail_at(at, "zero denominator");
        coeff /= Rational(den);
      }
      has_coeff = true;
    }
    bool is_w = false;
    if (has_coeff && cur.accept('*')) {
      if (!cur.accept('w')) cur.fail("expected 'w'");
      is_w = true;
    } else if (cur.accept('w')) {
      is_w = true;
    } else if (!has_coeff) {
      cur.fail("expected a number or 'w'");
    }
    coeff.canonicalize();
    (is_w ? y : x) += sign * coeff;
  }
  if (first) cur.fail("empty expression");
  return E.element(x, y);
}

}  // namespace

char tag_char(PrimeTag tag) {
  switch (tag) {
    case PrimeTag::Ramified: return 'r';
    case PrimeTag::Inert: return 'i';
    case PrimeTag::SplitFirst: return 's';
    case PrimeTag::SplitConj: return 't';
  }
  return '?';
}

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  const bool neg = cur.accept('-');
  Rational q(Integer(cur.digits()));
  if (cur.accept('/')) {
    cur.skip_ws();
    const std::size_t at = cur.raw();
    const Integer den(cur.digits());
    if (den == 0) cur.fail_at(at, "zero denominator");
    q /= Rational(den);
  }
  if (!cur.done()) cur.fail("trailing characters");
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

FieldElement parse_element(const ImQuadField& E, std::string_view text) {
  Cursor cur(text);
  return parse_linear(E, cur);
}

FactoredIdeal parse_ideal(const ImQuadField& E, std::string_view text) {
  Cursor cur(text);
  FactoredIdeal result;
  if (cur.done()) cur.fail("empty ideal literal");
  do {
    FactoredIdeal term;
    if (cur.accept('(')) {
      const std::size_t inner_pos = cur.pos();
      const std::string_view inner = cur.rest_until(')');
      cur.expect(')');
      Cursor sub(inner, inner_pos);
      const FieldElement e = parse_linear(E, sub);
      if (e.is_zero()) throw ParseError("zero generates no fractional ideal", inner_pos, std::string(inner));
      term = e.is_rational() ? factor_rational(E, e.x()) : factor_element(E, e);
    } else {
      const std::size_t at = cur.pos();
      const std::string ds = cur.digits();
      const long p = std::stol(ds);
      if (!is_prime(p)) throw ParseError(ds + " is not prime", at, ds);
      const char c = cur.peek();
      if (c == '\0') cur.fail("missing prime tag");
      const PrimeTag tag = tag_from_char(cur, c);
      cur.accept(c);
      try {
        term = FactoredIdeal::prime(prime_ideal(E, p, tag));
      } catch (const ValidationError& ex) {
        throw ParseError(ex.what(), at, ds + c);
      }
    }
    if (cur.accept('^')) term = term.pow(cur.signed_int());
    result *= term;
  } while (cur.accept('*'));
  if (!cur.done()) cur.fail("unexpected character");
  return result;
}

std::string format_ideal(const FactoredIdeal& I) {
  if (I.is_unit()) return "(1)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [P, e] : I) {
    if (!first) os << '*';
    first = false;
    os << P.p << tag_char(P.tag);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace k3br
