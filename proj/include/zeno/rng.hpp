#ifndef ZENO_RNG_HPP
#define ZENO_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace zeno {

/**
 * Counter-based generator (splitmix64 finalizer over key + counter).
 *
 * The i-th variate depends only on (key, i), so shots can be drawn in any
 * order, on any number of threads, with identical results. Streams are
 * split by folding identifiers into the key; distinct paths give
 * independent streams.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Derive a stream key from a seed and a path of identifiers.
    static CounterRng derive(std::uint64_t seed,
                             std::initializer_list<std::uint64_t> path) {
        std::uint64_t key = mix(seed);
        for (std::uint64_t id : path) key = mix(key ^ id);
        return CounterRng(key);
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(key_ + counter * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform double in [0, 1).
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    std::uint64_t key() const { return key_; }

private:
    std::uint64_t key_;
};

}  // namespace zeno

#endif
