#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slowb/config.hpp"
#include "slowb/params.hpp"
#include "slowb/rng.hpp"

namespace slowb {

// Exit rates of the generator at a given configuration. All bulk bonds carry
// rate 1; the flip rates at sites 1 and N-1 depend on the local occupancy.
struct RateTable {
    int bond_count = 0; // bonds (x,x+1), x = 1..N-2
    double bond_rate = 1.0;
    double left_flip_rate = 0.0;
    double right_flip_rate = 0.0;
    double total_rate = 0.0;
};

RateTable rates(const Configuration& cfg, const ModelParams& p);

struct Event {
    enum class Kind { Bond, LeftFlip, RightFlip };
    Kind kind;
    int bond = 0; // bond index x for Kind::Bond, in 1..N-2
    double micro_dt = 0.0;
};

struct EventCounts {
    std::uint64_t bond_events = 0;
    std::uint64_t null_bond_events = 0; // bond rang between equal occupancies
    std::uint64_t left_births = 0, left_deaths = 0;
    std::uint64_t right_births = 0, right_deaths = 0;

    std::int64_t net_mass_change() const {
        return static_cast<std::int64_t>(left_births + right_births) -
               static_cast<std::int64_t>(left_deaths + right_deaths);
    }
};

// Exact continuous-time simulation of the exclusion process with slow
// boundary. One instance owns one trajectory: configuration plus RNG stream.
// Macroscopic requests are converted once by the diffusive factor N^2.
class Simulator {
public:
    Simulator(const ModelParams& p, Configuration cfg, Rng rng)
        : params_(p), cfg_(std::move(cfg)), rng_(rng) {
        validate_params(p);
        if (cfg_.num_sites() != p.N - 1)
            throw std::invalid_argument("configuration length does not match N-1");
        const double w = p.boundary_scale();
        left_rate_[0] = p.alpha * w;
        left_rate_[1] = (1.0 - p.alpha) * w;
        right_rate_[0] = p.beta * w;
        right_rate_[1] = (1.0 - p.beta) * w;
        bulk_rate_ = static_cast<double>(p.N - 2);
    }

    const Configuration& config() const { return cfg_; }
    const ModelParams& params() const { return params_; }
    const EventCounts& counts() const { return counts_; }
    double micro_time() const { return cfg_.micro_time; }

    RateTable current_rates() const { return rates(cfg_, params_); }

    // One event of the exact chain: exponential holding time, then one event
    // chosen proportionally to its rate.
    Event step() {
        Event ev = draw_event();
        cfg_.micro_time += ev.micro_dt;
        apply(ev);
        return ev;
    }

    // Advance the microscopic clock to micro_target. hold(dt) is called with
    // the time spent in the current configuration before each change and for
    // the final partial interval; on_event(ev) after each applied event.
    template <class Hold, class OnEvent>
    void advance_micro_to(double micro_target, Hold&& hold, OnEvent&& on_event) {
        while (cfg_.micro_time < micro_target) {
            Event ev = draw_event();
            if (cfg_.micro_time + ev.micro_dt >= micro_target) {
                hold(micro_target - cfg_.micro_time);
                cfg_.micro_time = micro_target;
                return;
            }
            hold(ev.micro_dt);
            cfg_.micro_time += ev.micro_dt;
            apply(ev);
            on_event(ev);
        }
    }

    void advance_micro_to(double micro_target) {
        advance_micro_to(
            micro_target, [](double) {}, [](const Event&) {});
    }

    // Macroscopic time advance under the diffusive N^2 speed-up.
    void advance_macro(double t_macro) {
        if (t_macro < 0.0) throw std::invalid_argument("t_macro must be >= 0");
        const double n2 = static_cast<double>(params_.N) * params_.N;
        advance_micro_to(cfg_.micro_time + t_macro * n2);
    }

private:
    Event draw_event() {
        const std::uint8_t eta1 = cfg_.occupancy.front();
        const std::uint8_t etaR = cfg_.occupancy.back();
        const double rl = left_rate_[eta1];
        const double rr = right_rate_[etaR];
        const double total = bulk_rate_ + rl + rr;
        Event ev;
        ev.micro_dt = rng_.exponential(total);
        const double pick = rng_.uniform() * total;
        if (pick < bulk_rate_) {
            ev.kind = Event::Kind::Bond;
            // every bulk bond has rate exactly 1, so the integer part picks it
            int b = 1 + static_cast<int>(pick);
            if (b > params_.N - 2) b = params_.N - 2; // guard the open edge
            ev.bond = b;
        } else if (pick < bulk_rate_ + rl) {
            ev.kind = Event::Kind::LeftFlip;
        } else {
            ev.kind = Event::Kind::RightFlip;
        }
        return ev;
    }

    void apply(const Event& ev) {
        auto& occ = cfg_.occupancy;
        switch (ev.kind) {
        case Event::Kind::Bond: {
            auto& a = occ[static_cast<std::size_t>(ev.bond - 1)];
            auto& b = occ[static_cast<std::size_t>(ev.bond)];
            ++counts_.bond_events;
            if (a == b) {
                ++counts_.null_bond_events; // clock rings, nothing moves
            } else {
                std::swap(a, b);
            }
            break;
        }
        case Event::Kind::LeftFlip: {
            auto& a = occ.front();
            a ^= 1;
            if (a) ++counts_.left_births; else ++counts_.left_deaths;
            break;
        }
        case Event::Kind::RightFlip: {
            auto& b = occ.back();
            b ^= 1;
            if (b) ++counts_.right_births; else ++counts_.right_deaths;
            break;
        }
        }
    }

    ModelParams params_;
    Configuration cfg_;
    Rng rng_;
    EventCounts counts_;
    double left_rate_[2], right_rate_[2];
    double bulk_rate_;
};

// Convenience wrapper: advance a configuration by t_macro and return it.
Configuration simulate_until(Configuration cfg, const ModelParams& p, double t_macro, Rng rng);

// One sample path of M_t(H) = <pi_t,H> - <pi_0,H> - int_0^t N^2 L<pi_s,H> ds
// on the given macroscopic time grid. The compensator is accumulated exactly
// between events (its integrand is constant there).
struct MartingaleSeries {
    std::vector<double> times;  // macroscopic, starts at 0
    std::vector<double> values; // values[0] == 0
    std::string test_function_id;
};

MartingaleSeries dynkin_martingale(const ModelParams& p,
                                   const std::function<double(double)>& H,
                                   std::span<const double> t_grid,
                                   const Configuration& initial, Rng rng,
                                   std::string test_function_id = "H");

// Upper bound on Var(M_T(H)) from the quadratic variation: one bulk term of
// order 1/N and one boundary term of order N^-theta.
inline double martingale_variance_bound(const ModelParams& p, double sup_dH_sq,
                                        double sup_H_sq, double t_macro) {
    return (sup_dH_sq / p.N + 2.0 * sup_H_sq * p.boundary_scale()) * t_macro;
}

} // namespace slowb
