#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace slowb {

// Lattice scale and reservoir parameters. Sites live in {1,...,N-1}; particles
// exchange across bulk bonds at rate 1 and are created/killed at the two end
// sites at rates damped by N^-theta.
struct ModelParams {
    int N = 3;
    double alpha = 0.5;
    double beta = 0.5;
    double theta = 0.0;

    // N^-theta, the boundary slowdown factor
    double boundary_scale() const { return std::pow(static_cast<double>(N), -theta); }
};

// Full validation for the dynamics: reservoir densities must be proper
// probabilities in the open interval (0,1).
inline void validate_params(const ModelParams& p) {
    if (p.N < 3) throw std::invalid_argument("N must be >= 3, got " + std::to_string(p.N));
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1), got " + std::to_string(p.alpha));
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw std::invalid_argument("beta must lie in (0,1), got " + std::to_string(p.beta));
    if (!(p.theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
}

// Closed-form oracles stay well defined for the degenerate reservoirs
// alpha, beta in {0,1}, so they only require the closed interval.
inline void validate_params_closed(const ModelParams& p) {
    if (p.N < 3) throw std::invalid_argument("N must be >= 3, got " + std::to_string(p.N));
    if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1], got " + std::to_string(p.alpha));
    if (!(p.beta >= 0.0 && p.beta <= 1.0))
        throw std::invalid_argument("beta must lie in [0,1], got " + std::to_string(p.beta));
    if (!(p.theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
}

} // namespace slowb
