#include "zoabsgd/sampling.hpp"

#include <cmath>
#include <numbers>

namespace zoabsgd {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_key(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(a + kGoldenGamma) ^ mix64(b + 0x632be59bd9b4e019ULL));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(derive_key(seed, stream_id)) {}

std::uint64_t RandomStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGoldenGamma);
}

double RandomStream::uniform01() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() noexcept {
  // 1 - U lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RandomStream RandomStream::substream(std::uint64_t lane) const noexcept {
  return RandomStream(seed_, stream_id_, derive_key(key_, lane));
}

Vector sample_sphere(int d, RandomStream& s) {
  if (d < 1) throw ParameterError("sphere dimension must be at least 1");
  Vector e(d);
  if (d == 1) {
    e[0] = (s.next_u64() >> 63) ? 1.0 : -1.0;
    return e;
  }
  double norm2 = 0.0;
  do {
    for (int i = 0; i < d; ++i) e[i] = s.normal();
    norm2 = e.squaredNorm();
  } while (norm2 == 0.0);
  return e / std::sqrt(norm2);
}

double sample_radius(RandomStream& s) { return s.uniform(-1.0, 1.0); }

Vector sample_ball(const Vector& center, double radius, RandomStream& s) {
  const int d = static_cast<int>(center.size());
  const Vector dir = sample_sphere(d, s);
  const double rho = radius * std::pow(s.uniform01(), 1.0 / d);
  return center + rho * dir;
}

}  // namespace zoabsgd
