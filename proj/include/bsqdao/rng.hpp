#pragma once

#include <cstdint>

namespace bsq {

/// SplitMix64 (Steele, Lea & Flood; public-domain reference constants).
/// Fixed algorithm so a seed reproduces the same stream on every platform;
/// std::mt19937 and friends stay out of anything that feeds golden files.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); modulo bias is irrelevant at the
    /// bounds used here. below(0) == 0.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    /// True with probability percent/100.
    bool chance(std::uint64_t percent) { return below(100) < percent; }

  private:
    std::uint64_t state_;
};

}  // namespace bsq
