#pragma once

#include <cmath>
#include <cstdint>

namespace omq {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Counter-based random stream: output i of stream s is a pure function of
/// (seed, s, i), so ensembles of streams are reproducible regardless of
/// scheduling and cheap to fork. Not cryptographic.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(detail::splitmix64(seed) ^ detail::splitmix64(0xd2b74407b1ce6e93ULL + stream)) {}

  std::uint64_t next_u64() {
    return detail::splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
  }

  /// Uniform draw in (0, 1].
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; fully specified, so byte-identical
  /// across platforms (std::normal_distribution is not).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace omq
