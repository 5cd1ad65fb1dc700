#ifndef TAMESTRAT_RNG_HPP
#define TAMESTRAT_RNG_HPP

#include <cstdint>

namespace tamestrat {

// splitmix64; deterministic across platforms so seeded CLI runs are
// byte-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    uint64_t uniform(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + (int64_t)uniform((uint64_t)(hi - lo + 1));
    }

private:
    uint64_t state_;
};

} // namespace tamestrat

#endif
