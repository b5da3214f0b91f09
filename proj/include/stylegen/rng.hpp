#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace stylegen {

// SplitMix64 mixing step. Also used to expand one master seed into the
// per-stage sub-seeds (see split_seeds below).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic RNG used everywhere in the pipeline. The gaussian and
// shuffle paths are hand-rolled (Box-Muller, Fisher-Yates) instead of
// relying on std::normal_distribution / std::shuffle, whose output is
// implementation-defined; golden values in the tests depend on the stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller with a cached spare.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * 3.14159265358979323846 * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    std::size_t index_below(std::size_t n) {
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) {
            return;
        }
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            const std::size_t j = index_below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Sub-seeds for the pipeline stages, derived from one master seed.
struct SubSeeds {
    std::uint64_t encoder = 0;
    std::uint64_t styles = 0;
    std::uint64_t classifier = 0;
    std::uint64_t world = 0;
    std::uint64_t sampling = 0;
};

// Splitting rule: the five sub-seeds are the first five outputs of a
// SplitMix64 stream whose state starts at the master seed, taken in the
// fixed order (encoder, styles, classifier, world, sampling).
inline SubSeeds split_seeds(std::uint64_t master) {
    std::uint64_t state = master;
    auto next = [&state]() {
        const std::uint64_t out = splitmix64(state);
        state += 0x9e3779b97f4a7c15ull;
        return out;
    };
    SubSeeds s;
    s.encoder = next();
    s.styles = next();
    s.classifier = next();
    s.world = next();
    s.sampling = next();
    return s;
}

}  // namespace stylegen
