#ifndef FTLAB_RNG_HH
#define FTLAB_RNG_HH

#include <cstdint>

namespace ftlab {

// splitmix64: used for seed expansion only.
inline uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** -- fast, solid, and identical on every platform (unlike
// std::mt19937 + distributions, which the standard leaves underspecified).
struct Rng {
    uint64_t s[4];

    explicit Rng(uint64_t seed = 0) { reseed(seed); }

    void reseed(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s) w = splitmix64(sm);
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t next() {
        uint64_t result = rotl(s[1] * 5, 7) * 9;
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    bool bit() { return next() >> 63; }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        // multiply-shift; bias is negligible for our n (< 2^32)
        return (uint64_t)(((__uint128_t)next() * n) >> 64);
    }
};

// Counter-based derivation: shot i of a run with master seed m gets its own
// statistically independent stream, independent of execution order.
inline Rng shot_rng(uint64_t master_seed, uint64_t shot_index) {
    uint64_t s = master_seed ^ (0xd6e8feb86659fd93ULL * (shot_index + 1));
    uint64_t a = splitmix64(s);
    uint64_t b = splitmix64(s);
    return Rng(a ^ Rng::rotl(b, 31));
}

}  // namespace ftlab

#endif
