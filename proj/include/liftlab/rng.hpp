#pragma once

#include <cstdint>
#include <vector>

namespace liftlab {

// Deterministic 64-bit generator: SplitMix64 (Steele, Lea & Burton,
// "Fast splittable pseudorandom number generators", OOPSLA 2014).
// The state advances by the golden-ratio increment 0x9E3779B97F4A7C15 and
// each output is the two-round xor-shift-multiply finalizer of the state.
// Child streams are derived from the *original* seed and a stream index,
// so split() does not depend on how many values the parent has drawn.
// The algorithm is fixed here so that seeded experiments reproduce
// bit-identically across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Unbiased uniform draw from [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Independent child stream keyed by (seed, stream).
    Rng split(std::uint64_t stream) const {
        return Rng(mix(seed_ + mix(stream + 0x632BE59BD9B4E019ull)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Uniform k-subset of {0,...,n-1} via Floyd's algorithm; sorted output.
    std::vector<int> sample_without_replacement(int n, int k);

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace liftlab
