#pragma once

#include <cstdint>
#include <vector>

#include "beamcode/spatial.hpp"

namespace beamcode {

bool is_prime(std::int64_t n);

/// GF(p); construction verifies primality by trial division.
struct PrimeField {
  int p = 0;
};

PrimeField make_prime_field(int p);

/// Monic irreducible quadratic x^2 + c1*x + c0 over GF(p).
struct QuadraticModulus {
  int c1 = 0;
  int c0 = 0;
};

/// Smallest (c1, c0) in lexicographic order whose quadratic has no root in GF(p).
QuadraticModulus find_irreducible_quadratic(int p);

/// Element a + b*x of GF(p^2), with 0 <= a, b < p.
struct QuadExtElement {
  int a = 0;
  int b = 0;
  bool operator==(const QuadExtElement&) const = default;
};

/// Arithmetic in GF(p^2) = GF(p)[x]/(x^2 + c1*x + c0) under the canonical
/// modulus chosen by find_irreducible_quadratic.
class QuadExtField {
 public:
  explicit QuadExtField(int p);

  int p() const { return p_; }
  QuadraticModulus modulus() const { return modulus_; }
  std::int64_t group_order() const;  // q^2 - 1

  QuadExtElement zero() const { return {0, 0}; }
  QuadExtElement one() const { return {1, 0}; }
  QuadExtElement add(QuadExtElement u, QuadExtElement v) const;
  QuadExtElement sub(QuadExtElement u, QuadExtElement v) const;
  QuadExtElement mul(QuadExtElement u, QuadExtElement v) const;
  QuadExtElement pow(QuadExtElement g, std::int64_t e) const;
  QuadExtElement inverse(QuadExtElement u) const;

  /// An element a + b*x lies in the base field GF(p) iff b = 0.
  static bool in_base_field(QuadExtElement u) { return u.b == 0; }

 private:
  int p_ = 0;
  QuadraticModulus modulus_;
};

/// Smallest element in (b, a) scan order whose multiplicative order is exactly
/// q^2 - 1, verified through the prime divisors of q^2 - 1.
QuadExtElement find_primitive_element(const QuadExtField& field);
QuadExtElement find_primitive_element(int p);

/// Sidon set modulo q^2 - 1: all pairwise differences of distinct marks are
/// distinct modulo the modulus.
struct GolombRuler {
  std::vector<int> marks;  // strictly increasing
  std::int64_t modulus = 0;
};

bool is_sidon(const std::vector<int>& marks, std::int64_t modulus);

/// Bose-Chowla construction: { i in {1..q^2-2} : g^i - g in GF(q) } for the
/// canonical primitive element g of GF(q^2), q = p prime. The result has
/// exactly q marks and is verified to be Sidon before returning.
GolombRuler bose_chowla(int p);

/// Ruler marks with `extra` consecutive integers appended after the largest
/// mark. Appended marks may break the Sidon property.
SensorSet extend_ruler(const GolombRuler& ruler, int extra);

/// Bose-Chowla ruler on the largest prime <= count, extended with consecutive
/// integers up to `count` positions (e.g. count=32 -> 31-mark ruler plus one).
SensorSet bose_chowla_sensors(int count);

}  // namespace beamcode
