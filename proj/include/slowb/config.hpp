#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "slowb/params.hpp"
#include "slowb/rng.hpp"

namespace slowb {

// Occupancy state of the lattice {1,...,N-1}. occupancy[i] is site x = i+1.
struct Configuration {
    std::vector<std::uint8_t> occupancy;
    double micro_time = 0.0;

    int num_sites() const { return static_cast<int>(occupancy.size()); }
    int scale_N() const { return num_sites() + 1; }

    std::int64_t particle_count() const {
        std::int64_t s = 0;
        for (auto v : occupancy) s += v;
        return s;
    }
};

// Product Bernoulli(gamma(x/N)) initial state.
inline Configuration init_config(const ModelParams& p,
                                 const std::function<double(double)>& gamma, Rng& rng) {
    if (p.N < 3) throw std::invalid_argument("N must be >= 3");
    Configuration cfg;
    cfg.occupancy.resize(static_cast<std::size_t>(p.N - 1));
    for (int x = 1; x < p.N; ++x) {
        const double g = gamma(static_cast<double>(x) / p.N);
        if (!(g >= 0.0 && g <= 1.0))
            throw std::invalid_argument("profile value outside [0,1] at u=" +
                                        std::to_string(static_cast<double>(x) / p.N));
        cfg.occupancy[static_cast<std::size_t>(x - 1)] = rng.bernoulli(g) ? 1 : 0;
    }
    cfg.micro_time = 0.0;
    return cfg;
}

inline Configuration init_config(const ModelParams& p,
                                 const std::function<double(double)>& gamma,
                                 std::uint64_t seed) {
    Rng rng(seed);
    return init_config(p, gamma, rng);
}

// (1/N) sum_x H(x/N) eta(x), the pairing of the empirical measure with H.
template <class Fn>
double empirical_pairing(const Configuration& cfg, Fn&& H) {
    const int N = cfg.scale_N();
    double s = 0.0;
    for (int x = 1; x < N; ++x)
        if (cfg.occupancy[static_cast<std::size_t>(x - 1)])
            s += H(static_cast<double>(x) / N);
    return s / N;
}

} // namespace slowb
