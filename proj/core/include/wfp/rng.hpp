#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wfp {

/// Deterministic 64-bit stream (splitmix64 update). All randomized code in
/// the library draws from this so output depends on the seed alone, never on
/// the platform's standard-library distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, k). Rejection below the wrap threshold keeps the draw
    /// exactly uniform.
    std::uint64_t below(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("Rng::below: k must be positive");
        const std::uint64_t threshold = (0 - k) % k;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % k;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace wfp
