#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random generator.  Every consumer derives an independent
// stream from (seed, stream id); draws within a stream are indexed by a
// counter, so results do not depend on thread scheduling.  Stream
// derivation: key = mix(seed) xor mix(stream + C); draw i = mix(key + i*G)
// with G the 64-bit golden-ratio increment and mix the SplitMix64 finalizer.

namespace taustar {

namespace detail {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(detail::mix64(seed) ^
             detail::mix64(stream + 0x632be59bd9b4e019ULL)),
        counter_(0) {}

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (++counter_) * detail::kGolden);
  }

  // uniform on [0, 1) with 53 random bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform on {0, ..., bound - 1}, bias negligible for bound << 2^64
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  // standard normal via the polar (Marsaglia) method
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fisher-Yates shuffle driven by the given generator.
template <typename T>
void shuffle(T* data, std::size_t n, CounterRng& rng) {
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    T tmp = data[i - 1];
    data[i - 1] = data[j];
    data[j] = tmp;
  }
}

}  // namespace taustar
