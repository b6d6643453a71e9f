#pragma once

#include <cstdint>
#include <stdexcept>

namespace stirling {

// One splitmix64 step: advances the state, returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless splitmix64 mix. This is the named mixing function used everywhere
// a seed is combined with a stream/replicate index.
inline std::uint64_t mix64(std::uint64_t z) {
    return splitmix64(z);
}

// xoshiro256** seeded through splitmix64. Identical seed gives an identical
// stream on every platform; no std:: engines are involved.
class SeededRng {
  public:
    using result_type = std::uint64_t;

    explicit SeededRng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent stream: worker/replicate `stream` of user seed `seed`.
    static SeededRng derive(std::uint64_t seed, std::uint64_t stream) {
        return SeededRng(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SeededRng::below: bound must be positive");
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    std::uint64_t seed_;
};

}  // namespace stirling
