#include "stratalab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stratalab {

std::vector<Monomial> monomial_basis(int nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars <= 0 || degree < 0) return out;
  Monomial cur(static_cast<std::size_t>(nvars), 0);
  // Exponent of the first variable runs from high to low, matching grlex.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::int64_t slice_dimension(int nvars, int degree) {
  if (degree < 0 || nvars <= 0) return 0;
  std::int64_t num = 1, den = 1;
  for (int k = 1; k <= nvars - 1; ++k) {
    num *= degree + k;
    den *= k;
  }
  return num / den;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.insert(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("monomial arity mismatch");
  Polynomial p(nvars);
  p.insert(std::move(m), c);
  return p;
}

void Polynomial::insert(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Terms are grlex-sorted, so the first has maximal degree.
  return monomial_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) insert(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) insert(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      p.insert(std::move(m), ca * cb);
    }
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = constant(nvars_, Rational(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::vector<Rational> Polynomial::restrict_to_line(const std::vector<Rational>& c,
                                                   const std::vector<Rational>& e) const {
  if (static_cast<int>(c.size()) != nvars_ || static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("line parameter arity mismatch");
  int d = std::max(total_degree(), 0);
  std::vector<Rational> acc(static_cast<std::size_t>(d + 1), Rational(0));
  for (const auto& [m, coef] : terms_) {
    std::vector<Rational> term{coef};
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int k = 0; k < m[v]; ++k) {
        // Multiply the univariate polynomial by (c_v t + e_v).
        std::vector<Rational> next(term.size() + 1, Rational(0));
        for (std::size_t j = 0; j < term.size(); ++j) {
          next[j] += term[j] * e[v];
          next[j + 1] += term[j] * c[v];
        }
        term = std::move(next);
      }
    for (std::size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (static_cast<int>(vars.size()) != nvars_)
    throw std::invalid_argument("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

bool proportional(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  Rational ratio = g.leading_coefficient() / f.leading_coefficient();
  return f.scaled(ratio) == g;
}

namespace {

// Univariate polynomials as coefficient vectors, lowest power first.
std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  while (d.size() > 1 && d.back() == 0) d.pop_back();
  if (d.empty()) d.push_back(Rational(0));
  return d;
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) break;
    if (a.size() == 1 && a[0] == 0) break;
  }
  return a;
}

int gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  while (!(b.size() == 1 && b[0] == 0)) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) return false;
  int d = f.total_degree();
  if (d <= 1) return true;
  // Fixed family of lines; coefficients grow with the attempt index so the
  // family is not contained in any proper subvariety that matters here.
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Rational> c, e;
    for (int v = 0; v < f.nvars(); ++v) {
      c.emplace_back(1 + ((attempt + 1) * (2 * v + 1)) % 11);
      e.emplace_back(1 + ((attempt + 2) * (3 * v + 2)) % 13);
    }
    auto p = f.restrict_to_line(c, e);
    if (static_cast<int>(p.size()) - 1 != d) continue;  // degree dropped; line unusable
    if (gcd_degree(p, derivative(p)) == 0) return true;
  }
  return false;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial run() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = acc.scaled(Rational(-1));
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a nonnegative integer exponent");
      int e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 64) fail("exponent too large");
        ++pos_;
      }
      return base.pow(e);
    }
    return base;
  }

  Integer integer_literal() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    return Integer(digits);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      auto p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = integer_literal();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected a denominator");
        Integer den = integer_literal();
        if (den == 0) fail("zero denominator");
        return Polynomial::constant(static_cast<int>(vars_.size()), Rational(num, den));
      }
      return Polynomial::constant(static_cast<int>(vars_.size()), Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        name += text_[pos_];
        ++pos_;
      }
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (vars_[v] == name)
          return Polynomial::variable(static_cast<int>(vars_.size()), static_cast<int>(v));
      pos_ -= name.size();
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace stratalab
