#ifndef ACTIME_RNG_HPP
#define ACTIME_RNG_HPP

#include <cstdint>
#include <random>

namespace actime {

/// Name recorded in series metadata; bump when the sampling algorithm changes.
inline constexpr const char* kRngName = "mt19937_64/box-muller/v1";

/// splitmix64 finalizer, used to derive decorrelated child seeds from
/// (seed, stream-tag) pairs so parallel and serial runs agree exactly.
inline std::uint64_t mix_seed(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  return mix_seed(seed ^ mix_seed(tag));
}

/// Deterministic uniform/normal draws on top of std::mt19937_64.
///
/// The normal transform is pinned here (Box-Muller on 53-bit uniforms)
/// instead of delegating to std::normal_distribution, whose stream is
/// implementation-defined and would break bitwise reproducibility of
/// generated series across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1], safe as a log() argument.
  double uniform_pos() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; draws two uniforms per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace actime

#endif // ACTIME_RNG_HPP
