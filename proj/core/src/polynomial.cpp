#include "lierig/polynomial.hpp"

#include "lierig/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lierig {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

std::vector<Integer> Polynomial::primitive_integer() const {
  Integer lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content == 0) return out;
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients().size(), b.coefficients().size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> v(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (sgn(q) == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= q * b.coefficient(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::size_t count_real_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(Polynomial{} - r);
  }
  seq.pop_back();
  // Sign of each member at -inf and +inf is determined by its leading term.
  auto variations = [&](bool at_plus_infinity) {
    std::size_t count = 0;
    int prev = 0;
    for (const auto& q : seq) {
      int s = sgn(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace {

// Positive divisors of |n| by trial division. Adequate for the small
// coefficients produced by structure-constant matrices.
std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  std::map<Integer, unsigned> factors;
  for (Integer d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      ++factors[d];
      m /= d;
    }
  }
  if (m > 1) ++factors[m];
  std::vector<Integer> divs{1};
  for (const auto& [prime, exponent] : factors) {
    const std::size_t base = divs.size();
    Integer power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalRootSplit split_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InputError("rational roots of the zero polynomial");
  RationalRootSplit out;
  std::vector<Rational> coeffs = p.coefficients();

  std::size_t zero_mult = 0;
  while (zero_mult < coeffs.size() && sgn(coeffs[zero_mult]) == 0) ++zero_mult;
  Polynomial rest(std::vector<Rational>(coeffs.begin() + static_cast<std::ptrdiff_t>(zero_mult), coeffs.end()));

  std::vector<std::pair<Rational, std::size_t>> found;
  if (zero_mult > 0) found.emplace_back(Rational(0), zero_mult);

  if (rest.degree() >= 1) {
    const auto ints = rest.primitive_integer();
    const auto ps = positive_divisors(ints.front());
    const auto qs = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps) {
      for (const auto& b : qs) {
        Rational r(a, b);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      std::size_t mult = 0;
      const Polynomial linear(std::vector<Rational>{-r, Rational(1)});
      while (rest.degree() >= 1 && sgn(rest(r)) == 0) {
        rest = divmod(rest, linear).first;
        ++mult;
      }
      if (mult > 0) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.roots = std::move(found);
  const Rational lead = rest.leading();
  std::vector<Rational> monic = rest.coefficients();
  for (auto& c : monic) c /= lead;
  out.residual = Polynomial(std::move(monic));
  return out;
}

}  // namespace lierig
