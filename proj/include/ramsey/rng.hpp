#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ramsey {

// splitmix64 step; used for seed derivation so that per-trial streams are
// independent of evaluation order (serial and parallel runs agree).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial seed: hash of (master seed, trial index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index + 0x9e3779b97f4a7c15ULL);
    return splitmix64(s);
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double canonical(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) by rejection.
inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = eng();
        if (x >= threshold) return x % bound;
    }
}

// Fisher-Yates shuffle written out so results do not depend on the standard
// library's std::shuffle implementation.
template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& eng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// First k entries of a random permutation of [0, n); used to sample vertex sets.
inline std::vector<int> sample_distinct(int n, int k, std::mt19937_64& eng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(bounded(eng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

} // namespace ramsey
