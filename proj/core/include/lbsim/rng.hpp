#pragma once

#include <cstdint>

namespace lbsim {

// Counter-based generator: output i is a fixed hash of (key, i), so streams
// are reproducible, cheap to fork per trial, and independent draws never
// share state.  The mix is the splitmix64 finalizer over a Weyl sequence.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull))) {}

  /// Independent stream for a trial index under the same seed.
  CounterRng fork(std::uint64_t stream) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(stream + 0x94d049bb133111ebull));
    r.ctr_ = 0;
    return r;
  }

  std::uint64_t next() { return mix(key_ + ctr_++ * 0x9e3779b97f4a7c15ull); }

  /// Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; safe under log().
  double next_unit_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  bool next_bit() { return next() >> 63; }

  /// Low `bits` bits random, rest zero; bits in [0, 64].
  std::uint64_t next_bits(int bits) {
    std::uint64_t v = next();
    return bits >= 64 ? v : v & ((std::uint64_t(1) << bits) - 1);
  }

  /// Uniform in [0, n); n > 0.  Rejection-free modulo is fine at our scales.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace lbsim
