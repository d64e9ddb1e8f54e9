// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kazhdan {

/// q = prime^exponent. Kept factored so that closed forms can be evaluated
/// for prime powers beyond 64-bit range.
struct PrimePower {
  std::uint64_t prime = 2;
  unsigned exponent = 1;

  /// q as a double (exact while q < 2^53).
  double value() const;
  /// Natural log of q, computed without forming q.
  double log() const;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization. Throws DomainError naming the
/// factorization when q is not a prime power (or q < 2).
PrimePower factor_prime_power(std::uint64_t q);

/// Validates the base and returns the factored form; throws DomainError when
/// prime is not prime or exponent is zero.
PrimePower make_prime_power(std::uint64_t prime, unsigned exponent);

/// All prime powers 2 <= q <= limit, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

/// GF(k^n), elements encoded as integers 0..q-1 whose base-k digits are
/// polynomial coefficients (lowest degree first) reduced modulo a monic
/// irreducible polynomial of degree n.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws DomainError when q is not a prime power or q > 2^16.
  explicit FiniteField(std::uint64_t q);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }
  /// Coefficients c_0..c_n of the modulus, c_n = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const { return mul_table_[a * order_ + b]; }
  /// Throws DomainError for zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

 private:
  Element mul_slow(Element a, Element b) const;

  std::uint32_t order_;
  std::uint32_t characteristic_;
  unsigned degree_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> mul_table_;
};

/// First monic irreducible polynomial of the given degree over GF(prime),
/// in ascending order of the coefficient encoding c_0 + c_1 k + ... .
std::vector<std::uint32_t> find_irreducible(std::uint32_t prime, unsigned degree);

/// Exhaustive check: no monic divisor of degree 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t prime);

}  // namespace kazhdan
