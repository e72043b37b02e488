#pragma once

#include <cstdint>
#include <random>

namespace corrclust {

/// Seed for stream `index` derived from a base seed.
///
/// state = seed + (index + 1) * 0x9E3779B97F4A7C15, then the splitmix64
/// finalizer (xor-shift-multiply). Pure 64-bit unsigned arithmetic, so the
/// derivation is identical on every platform; restart i of a clustering run
/// with config seed s always uses derive_seed(s, i).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random source shared by the generators and clusterers.
///
/// Wraps std::mt19937_64 (whose output sequence is pinned by the C++
/// standard) and implements its own variate transforms, because the standard
/// library distributions are not portable across implementations:
///   - next_unit:   (next_u64() >> 11 + 1) * 2^-53, uniform on (0, 1]
///   - next_normal: Box-Muller on two next_unit draws, second value cached
///   - next_int:    next_u64() % bound (bias is negligible for bound << 2^64)
/// A reimplementation that follows these rules reproduces the exact streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  double next_unit();
  double next_normal();
  int next_int(int bound);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace corrclust
