#pragma once

#include <cstdint>
#include <span>

namespace ontoscope {

// xoshiro256** 1.0 (Blackman & Vigna), seeded through splitmix64. Sampling
// runs record the generator name so results can be reproduced elsewhere.
class Xoshiro256 {
public:
    static constexpr const char* kName = "xoshiro256**";

    explicit Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0) {
        // distinct streams for the same seed: mix the stream index through
        // splitmix64 ahead of the state words
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (auto& word : state_) {
            word = splitmix64(x);
        }
    }

    std::uint64_t next_u64() {
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

    // uniform in [0,1) with 53 random bits
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // CDF inversion with strict comparison: cells with probability exactly
    // zero can never be drawn. Returns the last positive cell when rounding
    // dust pushes the draw past the accumulated total.
    int discrete(std::span<const double> probs) {
        const double u = uniform01();
        double cum = 0.0;
        int last_positive = -1;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (probs[i] > 0.0) last_positive = static_cast<int>(i);
            cum += probs[i];
            if (u < cum) return static_cast<int>(i);
        }
        return last_positive;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

}  // namespace ontoscope
