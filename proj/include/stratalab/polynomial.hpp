#pragma once

// Sparse multivariate polynomials over Q in at most six named variables.
//
// Monomials are exponent vectors against a fixed variable list.  The basis
// of a graded slice R_d is enumerated in graded-lexicographic order with the
// earlier variable larger, and every matrix in the slice machinery indexes
// rows/columns by that enumeration.

#include "stratalab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace stratalab {

using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded lex: higher total degree first, then lexicographically larger
/// exponent vector first (x before y before ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All degree-d monomials in nvars variables, in GrlexGreater order.
std::vector<Monomial> monomial_basis(int nvars, int degree);

/// C(degree + nvars - 1, nvars - 1); 0 for negative degree.
std::int64_t slice_dimension(int nvars, int degree);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(int nvars, Monomial m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  const std::map<Monomial, Rational, GrlexGreater>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  /// Leading coefficient in the graded-lex order.
  Rational leading_coefficient() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Coefficients of f(c_0 t + e_0, ..., c_{n-1} t + e_{n-1}) by ascending
  /// power of t.
  std::vector<Rational> restrict_to_line(const std::vector<Rational>& c,
                                         const std::vector<Rational>& e) const;

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational, GrlexGreater> terms_;

  void insert(Monomial m, const Rational& c);
  friend Polynomial parse_polynomial(const std::string&, const std::vector<std::string>&);
};

/// f and g proportional by a nonzero rational?
bool proportional(const Polynomial& f, const Polynomial& g);

/// Deterministic squarefreeness test via univariate restrictions to a fixed
/// family of lines: a degree-preserving squarefree restriction certifies the
/// polynomial squarefree, while a repeated factor forces every
/// degree-preserving restriction to repeat it.
bool is_squarefree(const Polynomial& f);

/// Parses plain infix text ("3/2*x*y - z^2") over the declared variables.
/// Supported: + - * ^ ( ), rational literals p or p/q, named variables.
/// Throws std::invalid_argument citing the byte offset of the problem.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace stratalab
