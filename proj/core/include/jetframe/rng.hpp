#ifndef JETFRAME_RNG_HPP
#define JETFRAME_RNG_HPP

#include <cstdint>
#include <random>

namespace jetframe {

/// splitmix64 finalizer; derives independent per-item seeds from one seed
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Portable draws: std::uniform_int_distribution is implementation defined,
/// which would break byte-identical output across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int uniform(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(g_() % span);
    }
    int nonzero(int lo, int hi) {
        for (;;) {
            int v = uniform(lo, hi);
            if (v != 0) return v;
        }
    }
    std::uint64_t next() { return g_(); }

private:
    std::mt19937_64 g_;
};

}  // namespace jetframe

#endif
