#include "heis/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace heis {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Monomial> monomials_up_to(int d) {
  std::vector<Monomial> out;
  for (int deg = d; deg >= 0; --deg)
    for (int a = deg; a >= 0; --a)
      for (int b = deg - a; b >= 0; --b) out.emplace_back(a, b, deg - a - b);
  return out;
}

namespace {

// mpq_class(n, d) leaves n/d unreduced; every coefficient entering a Poly is
// brought to canonical form so that term maps compare reliably.
Rational canonical(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return r;
}

}  // namespace

Poly::Poly(const Rational& c) {
  Rational r = canonical(c);
  if (r != 0) terms_.emplace(Monomial{}, std::move(r));
}

Poly Poly::var(Var v) {
  Monomial m;
  m.exps[static_cast<int>(v)] = 1;
  return term(m, 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
  accumulate(m, canonical(coeff));
}

void Poly::accumulate(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.accumulate(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::scale(const Rational& coeff) {
  Rational c = canonical(coeff);
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::derivative(Var v) const {
  const int idx = static_cast<int>(v);
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.exps[idx] == 0) continue;
    Monomial dm = m;
    dm.exps[idx] -= 1;
    out.accumulate(dm, c * m.exps[idx]);
  }
  return out;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Poly out(1), base = *this;
  while (n > 0) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

namespace {

Rational ipow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rational Poly::evaluate(const Point3& p) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_)
    sum += c * ipow(p.x, m.exps[0]) * ipow(p.y, m.exps[1]) *
           ipow(p.z, m.exps[2]);
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += heis::to_string(c);
    for (int v = 0; v < 3; ++v) {
      if (m.exps[v] == 0) continue;
      out += '*';
      out += kNames[v];
      if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
    }
  }
  return out;
}

Poly partial_derivative(const Poly& p, Var v) { return p.derivative(v); }

Rational evaluate(const Poly& p, const Point3& point) {
  return p.evaluate(point);
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' integer)?
// atom   := rational | 'x' | 'y' | 'z' | '(' expr ')'
// A '/' directly after an integer literal belongs to the literal.
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (eat('*')) p *= unary();
    return p;
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Poly::var(static_cast<Var>(c - 'x'));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      return Poly(parse_rational(num + "/" + den));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace heis
