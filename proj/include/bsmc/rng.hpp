#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace bsmc {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer: a bijective avalanche mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

// Counter-based generator: the k-th output is a hash of (key, k). Streams are
// identified by (seed, ids...), so each particle / trajectory / trial gets an
// independent stream and results do not depend on scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed)
      : key_(detail::mix64(seed + detail::kGolden)) {}

  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids)
      : RngStream(seed) {
    for (auto id : ids) mix_in(id);
  }

  // Child stream for substream id; the parent is unaffected.
  RngStream derive(std::uint64_t id) const {
    RngStream child(*this);
    child.mix_in(id);
    child.counter_ = 0;
    child.have_spare_ = false;
    return child;
  }

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (++counter_) * detail::kGolden);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the spare is cached in the stream state.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1 always
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) %
           n;
  }

 private:
  void mix_in(std::uint64_t id) {
    key_ = detail::mix64(key_ ^ detail::mix64(id + detail::kGolden));
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bsmc
