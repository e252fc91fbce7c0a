#pragma once

#include <cstdint>

#include "zoabsgd/errors.hpp"

namespace zoabsgd {

/// Independent lanes inside one batch element's stream.
enum class Lane : std::uint64_t {
  direction = 1,
  radius = 2,
  noise_plus = 3,
  noise_minus = 4,
  gradient_noise = 5,
};

/// Counter-based random source.
///
/// The i-th draw is a pure function of (seed, stream_id, i): a 64-bit key is
/// hashed from the seed and stream id and each output is the SplitMix64
/// finalizer applied to key + (i + 1) * golden_gamma. Any draw can be reached
/// without generating its predecessors, so batch element i of iteration k gets
/// stream_id = k * B + i regardless of which thread evaluates it.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  /// Standard normal via Box-Muller (one draw consumes two counters).
  double normal() noexcept;

  /// A stream keyed on this one's key and `lane`; independent of the parent.
  RandomStream substream(Lane lane) const noexcept { return substream(static_cast<std::uint64_t>(lane)); }
  RandomStream substream(std::uint64_t lane) const noexcept;

 private:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t key) noexcept
      : seed_(seed), stream_id_(stream_id), key_(key) {}

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Stream for batch element `element` of iteration `iteration`.
inline RandomStream element_stream(std::uint64_t seed, std::uint64_t iteration, std::uint64_t batch,
                                   std::uint64_t element) {
  return RandomStream(seed, iteration * batch + element);
}

/// Uniform direction on the unit sphere of R^d (normalized Gaussian).
/// Throws ParameterError for d == 0.
Vector sample_sphere(int d, RandomStream& s);

/// Uniform draw on [-1, 1].
double sample_radius(RandomStream& s);

/// Uniform point in the ball of radius `radius` around `center`.
Vector sample_ball(const Vector& center, double radius, RandomStream& s);

}  // namespace zoabsgd
