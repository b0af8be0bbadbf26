#include "beamcode/golomb.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace beamcode {

namespace {

constexpr int kMaxPrime = 32749;  // largest prime below 2^15

void require_supported_prime(int p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) +
                                " is not prime");
  }
  if (p > kMaxPrime) {
    throw std::invalid_argument(std::string(who) + ": primes above 2^15 are not supported");
  }
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField make_prime_field(int p) {
  require_supported_prime(p, "make_prime_field");
  return PrimeField{p};
}

QuadraticModulus find_irreducible_quadratic(int p) {
  require_supported_prime(p, "find_irreducible_quadratic");
  for (int c1 = 0; c1 < p; ++c1) {
    for (int c0 = 0; c0 < p; ++c0) {
      bool has_root = false;
      for (int x = 0; x < p && !has_root; ++x) {
        has_root = ((std::int64_t(x) * x + std::int64_t(c1) * x + c0) % p) == 0;
      }
      if (!has_root) return QuadraticModulus{c1, c0};
    }
  }
  throw std::runtime_error("find_irreducible_quadratic: no irreducible quadratic found");
}

QuadExtField::QuadExtField(int p) : p_(p) {
  require_supported_prime(p, "QuadExtField");
  modulus_ = find_irreducible_quadratic(p);
}

std::int64_t QuadExtField::group_order() const {
  return std::int64_t(p_) * p_ - 1;
}

QuadExtElement QuadExtField::add(QuadExtElement u, QuadExtElement v) const {
  return {(u.a + v.a) % p_, (u.b + v.b) % p_};
}

QuadExtElement QuadExtField::sub(QuadExtElement u, QuadExtElement v) const {
  return {(u.a - v.a + p_) % p_, (u.b - v.b + p_) % p_};
}

QuadExtElement QuadExtField::mul(QuadExtElement u, QuadExtElement v) const {
  // (a + b x)(c + d x) with x^2 = -c1 x - c0.
  const std::int64_t p = p_;
  const std::int64_t lo = std::int64_t(u.a) * v.a;
  const std::int64_t mid = std::int64_t(u.a) * v.b + std::int64_t(u.b) * v.a;
  const std::int64_t hi = std::int64_t(u.b) * v.b;
  std::int64_t a = (lo - hi * modulus_.c0) % p;
  std::int64_t b = (mid - hi * modulus_.c1) % p;
  if (a < 0) a += p;
  if (b < 0) b += p;
  return {int(a), int(b)};
}

QuadExtElement QuadExtField::pow(QuadExtElement g, std::int64_t e) const {
  if (e < 0) return pow(inverse(g), -e);
  QuadExtElement result = one();
  QuadExtElement base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

QuadExtElement QuadExtField::inverse(QuadExtElement u) const {
  if (u == zero()) {
    throw std::invalid_argument("QuadExtField::inverse: zero is not invertible");
  }
  return pow(u, group_order() - 1);
}

QuadExtElement find_primitive_element(const QuadExtField& field) {
  const std::int64_t order = field.group_order();
  const auto divisors = prime_divisors(order);
  for (int b = 0; b < field.p(); ++b) {
    for (int a = 0; a < field.p(); ++a) {
      if (a == 0 && b == 0) continue;
      const QuadExtElement g{a, b};
      bool primitive = true;
      for (std::int64_t ell : divisors) {
        if (field.pow(g, order / ell) == field.one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) return g;
    }
  }
  throw std::runtime_error("find_primitive_element: none found (field arithmetic bug)");
}

QuadExtElement find_primitive_element(int p) {
  return find_primitive_element(QuadExtField(p));
}

bool is_sidon(const std::vector<int>& marks, std::int64_t modulus) {
  std::unordered_set<std::int64_t> seen;
  seen.reserve(marks.size() * marks.size());
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = 0; j < marks.size(); ++j) {
      if (i == j) continue;
      std::int64_t d = (std::int64_t(marks[i]) - marks[j]) % modulus;
      if (d < 0) d += modulus;
      if (!seen.insert(d).second) return false;
    }
  }
  return true;
}

GolombRuler bose_chowla(int p) {
  require_supported_prime(p, "bose_chowla");
  const QuadExtField field(p);
  const QuadExtElement g = find_primitive_element(field);
  const std::int64_t order = field.group_order();  // q^2 - 1

  std::vector<int> marks;
  QuadExtElement power = field.one();
  for (std::int64_t i = 1; i <= order - 1; ++i) {  // i in {1, ..., q^2 - 2}
    power = field.mul(power, g);
    if (QuadExtField::in_base_field(field.sub(power, g))) {
      marks.push_back(int(i));
    }
  }

  if (int(marks.size()) != p) {
    throw std::runtime_error("bose_chowla: expected " + std::to_string(p) +
                             " marks, got " + std::to_string(marks.size()));
  }
  if (!is_sidon(marks, order)) {
    throw std::runtime_error("bose_chowla: Sidon verification failed");
  }
  return GolombRuler{std::move(marks), order};
}

SensorSet extend_ruler(const GolombRuler& ruler, int extra) {
  if (extra < 0) throw std::invalid_argument("extend_ruler: extra must be >= 0");
  std::vector<int> positions = ruler.marks;
  const int start = positions.empty() ? 1 : positions.back() + 1;
  for (int i = 0; i < extra; ++i) positions.push_back(start + i);
  return make_sensor_set(std::move(positions));
}

SensorSet bose_chowla_sensors(int count) {
  if (count < 2) throw std::invalid_argument("bose_chowla_sensors: count must be >= 2");
  int p = count;
  while (!is_prime(p)) --p;
  return extend_ruler(bose_chowla(p), count - p);
}

}  // namespace beamcode
