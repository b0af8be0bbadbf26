#include "beamcode/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace beamcode {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s = h ^ (a * 0x9e3779b97f4a7c15ULL);
  h = splitmix64(s);
  s = h ^ (b * 0xd1b54a32d192ed03ULL);
  return RngStream(splitmix64(s));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::next_unit() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RngStream::next_below: n must be positive");
  return next_u64() % n;
}

void RngStream::next_gaussian_pair(double& z0, double& z1) {
  constexpr double two_pi = 6.283185307179586476925286766559005768;
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(two_pi * u2);
  z1 = r * std::sin(two_pi * u2);
}

std::complex<double> RngStream::next_complex_gaussian(double sigma) {
  double z0, z1;
  next_gaussian_pair(z0, z1);
  const double scale = sigma * 0.7071067811865475244;  // sigma / sqrt(2)
  return {scale * z0, scale * z1};
}

}  // namespace beamcode
