#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dg {

// Deterministic random source. mt19937_64 supplies the bit stream; the
// value transforms (uniform doubles, Box-Muller normals, bounded ints)
// are implemented here instead of through std distributions, whose output
// sequences differ between standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the second value of each pair is
    // cached and returned on the next call.
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Uniform integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    // Mixes a base seed with up to two stream tags so that independent
    // substreams (per class, per epoch, per sample) never overlap.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t s0,
                                std::uint64_t s1 = 0);

private:
    std::mt19937_64 gen_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

// Stream tags used when deriving substream seeds.
inline constexpr std::uint64_t kStreamInit = 0x494e4954;     // weight init
inline constexpr std::uint64_t kStreamShuffle = 0x53485546;  // epoch shuffle
inline constexpr std::uint64_t kStreamSplit = 0x53504c54;    // dataset split
inline constexpr std::uint64_t kStreamSample = 0x53414d50;   // synthetic sample

}  // namespace dg
