#pragma once

#include <cstdint>

namespace proofmesh {

// Deterministic splitmix64 stream. Every random draw in the toolkit flows
// from one user seed through named substreams derived with `substream`, so
// runs are reproducible bit-for-bit across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased enough for protocol randomness at 31-bit moduli; the scheme is
    // internal, so only determinism matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// Derives an independent stream seed from (seed, tag, index).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index = 0) {
    Rng mix(seed ^ (0xA24BAED4963EE407ULL * (tag + 1)) ^ (0x9FB21C651E98DF25ULL * (index + 1)));
    return mix.next();
}

}  // namespace proofmesh
