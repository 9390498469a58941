#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace slowb {

// splitmix64 step; used to key independent streams from (seed, stream index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t k = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL;
    k ^= splitmix64(s);
    return k;
}

// mt19937_64 with hand-rolled draws so identical seeds give identical streams
// on every standard library (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : gen_(mix_key(seed, stream)) {}

    std::uint64_t raw() { return gen_(); }

    // uniform in [0,1), 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform integer in [0,n), n > 0
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    // independent child stream, for per-replica parallelism
    Rng spawn(std::uint64_t stream) { return Rng(gen_(), stream); }

private:
    std::mt19937_64 gen_;
};

} // namespace slowb
