#ifndef VLAB_RNG_HPP
#define VLAB_RNG_HPP

#include <cstdint>

namespace vlab {

// Seeded splittable PRNG (splitmix64 core).  Every source of randomness in
// the library is threaded through one of these explicitly; there is no
// global state, so any run is reproducible from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        std::uint64_t lim = n * (UINT64_MAX / n);
        std::uint64_t x;
        do { x = next(); } while (x >= lim && lim != 0);
        return x % n;
    }

    // Derive an independent child stream; the parent is unchanged.
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x6a09e667f3bcc909ull + stream * 0x8cb92ba72f3d8dd7ull));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace vlab

#endif
