#ifndef RECIP_RNG_HPP
#define RECIP_RNG_HPP

#include <cstdint>
#include <random>

namespace recip {

// Deterministic RNG used everywhere randomness is needed, so that a (seed,
// parameters) pair reproduces a run bit-for-bit.  Distinct consumers derive
// sub-streams with derive() instead of sharing one generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{splitmix(s), splitmix(s), splitmix(s), splitmix(s)};
    gen_ = std::mt19937_64(seq);
  }

  std::uint64_t u64() { return gen_(); }

  // uniform in [lo, hi], inclusive
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  double unit_real() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }

  // Independent-looking generator for a named sub-task.
  Rng derive(std::uint64_t stream) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  static std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace recip

#endif
