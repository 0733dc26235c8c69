#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lierig {

/// Exact arbitrary-precision rational. GMP keeps it canonical: gcd(|p|, q) = 1, q > 0.
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

}  // namespace lierig
