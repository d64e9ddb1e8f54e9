// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/finite_field.hpp"

#include <cmath>
#include <sstream>

#include "kazhdan/errors.hpp"

namespace kazhdan {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t k) {
  // k is prime and small: Fermat.
  std::uint64_t result = 1, base = a % k;
  for (std::uint32_t e = k - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % k;
    base = base * base % k;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(k); b nonzero after trimming.
Poly poly_mod(Poly a, Poly b, std::uint32_t k) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod(b.back(), k);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % k;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % k;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + k - sub) % k);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t code, std::uint32_t k, unsigned length) {
  Poly p(length, 0);
  for (unsigned i = 0; i < length; ++i) {
    p[i] = static_cast<std::uint32_t>(code % k);
    code /= k;
  }
  return p;
}

}  // namespace

double PrimePower::value() const {
  return std::pow(static_cast<double>(prime), static_cast<double>(exponent));
}

double PrimePower::log() const {
  return static_cast<double>(exponent) * std::log(static_cast<double>(prime));
}

std::string PrimePower::to_string() const {
  std::ostringstream out;
  out << prime;
  if (exponent != 1) out << '^' << exponent;
  return out.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) throw DomainError("q = " + std::to_string(q) + " is not a prime power (q < 2)");
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t rest = q;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  if (factors.size() != 1) {
    std::ostringstream msg;
    msg << "q = " << q << " is not a prime power (" << q << " = ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) msg << " * ";
      msg << factors[i].first;
      if (factors[i].second > 1) msg << '^' << factors[i].second;
    }
    msg << ')';
    throw DomainError(msg.str());
  }
  return {factors[0].first, factors[0].second};
}

PrimePower make_prime_power(std::uint64_t prime, unsigned exponent) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (exponent == 0) throw DomainError("prime power exponent must be at least 1");
  return {prime, exponent};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<bool> hit(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    for (std::uint64_t pw = p; pw <= limit; pw *= p) {
      hit[pw] = true;
      if (pw > limit / p) break;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (hit[q]) out.push_back(q);
  }
  return out;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t prime) {
  Poly p = poly;
  trim(p);
  if (p.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(p.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= prime;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = decode(code, prime, d + 1);
      divisor[d] = 1;
      if (poly_mod(p, divisor, prime).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t prime, unsigned degree) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= prime;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly candidate = decode(code, prime, degree + 1);
    candidate[degree] = 1;
    if (is_irreducible(candidate, prime)) return candidate;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for valid input
}

FiniteField::FiniteField(std::uint64_t q) {
  const PrimePower pp = factor_prime_power(q);
  if (q > (1U << 16)) throw DomainError("field order " + std::to_string(q) + " exceeds 2^16");
  order_ = static_cast<std::uint32_t>(q);
  characteristic_ = static_cast<std::uint32_t>(pp.prime);
  degree_ = pp.exponent;
  modulus_ = degree_ == 1 ? Poly{0, 1} : find_irreducible(characteristic_, degree_);
  mul_table_.resize(static_cast<std::size_t>(order_) * order_);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a; b < order_; ++b) {
      const Element c = mul_slow(a, b);
      mul_table_[a * order_ + b] = c;
      mul_table_[b * order_ + a] = c;
    }
  }
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const {
  return decode(a, characteristic_, degree_);
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  Element code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    code = code * characteristic_ + coeffs[i] % characteristic_;
  }
  return code;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (degree_ == 1) return (a + b) % characteristic_;
  Element out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((a % characteristic_ + b % characteristic_) % characteristic_) * place;
    a /= characteristic_;
    b /= characteristic_;
    place *= characteristic_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  if (degree_ == 1) return (a + characteristic_ - b) % characteristic_;
  Element out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((a % characteristic_ + characteristic_ - b % characteristic_) % characteristic_) * place;
    a /= characteristic_;
    b /= characteristic_;
    place *= characteristic_;
  }
  return out;
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  if (degree_ == 1) {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % characteristic_);
  }
  const Poly pa = coefficients(a);
  const Poly pb = coefficients(b);
  Poly prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    for (unsigned j = 0; j < degree_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % characteristic_);
    }
  }
  return from_coefficients(poly_mod(prod, modulus_, characteristic_));
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = one(), base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

}  // namespace kazhdan
