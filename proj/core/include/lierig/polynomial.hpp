#pragma once

#include "lierig/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lierig {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  /// Same roots, integer coefficients with content 1 and positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Number of distinct real roots, via a Sturm sequence.
std::size_t count_real_roots(const Polynomial& p);

struct RationalRootSplit {
  std::vector<std::pair<Rational, std::size_t>> roots;  // ascending, with multiplicity
  Polynomial residual;                                  // monic, no rational roots
};

/// Extracts every rational root (rational-root test on the primitive integer form).
RationalRootSplit split_rational_roots(const Polynomial& p);

}  // namespace lierig
