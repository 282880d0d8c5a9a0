#include "zeno/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno {

namespace {

void validate_params(const CqzeParams& p) {
    if (p.outer_cycles < 1 || p.inner_cycles < 1) {
        throw std::invalid_argument("cycle counts must be >= 1");
    }
}

double real_part(const Amp& a) {
    // The protocol uses only real rotations and the real beam-splitter
    // convention, so imaginary parts are identically zero.
    return a.real();
}

}  // namespace

CycleAngles protocol_angles(const CqzeParams& p) {
    return {std::numbers::pi / (2.0 * p.outer_cycles),
            std::numbers::pi / (2.0 * p.inner_cycles)};
}

double CqzeOutcome::ledger_total() const {
    double total = 0.0;
    for (const auto& [k, e] : ledger) total += e.probability;
    return total;
}

double CqzeOutcome::ledger_total(Mode sink) const {
    double total = 0.0;
    for (const auto& [k, e] : ledger) {
        if (k.sink == sink) total += e.probability;
    }
    return total;
}

double CqzeOutcome::tagged_ledger_total() const {
    double total = 0.0;
    for (const auto& [k, e] : ledger) total += e.tagged;
    return total;
}

void inner_cycle(PhotonState& state, const CqzeParams& p, int m, int n,
                 const CycleAngles& angles) {
    validate_params(p);
    if (m < 1 || m > p.outer_cycles || n < 1 || n > p.inner_cycles) {
        throw std::invalid_argument("cycle index out of range");
    }

    state.apply_rotation(Mode::Inner, {angles.inner_rad});
    state.apply_pbs(Mode::Inner, Mode::Channel, Mode::Inner);
    state.mark_channel(Mode::Channel);

    if (p.policy == ChannelPolicy::Blocked) {
        state.absorb(Mode::Channel, Mode::SinkDB, (m - 1) * p.inner_cycles + n);
    } else {
        // Far mirror is an exact identity; the reflected H part recombines
        // with the V part that stayed behind.
        state.apply_pbs(Mode::Channel, Mode::Inner, Mode::Channel);
    }
}

void outer_cycle(PhotonState& state, const CqzeParams& p, int m,
                 const CycleAngles& angles) {
    validate_params(p);
    if (m < 1 || m > p.outer_cycles) {
        throw std::invalid_argument("cycle index out of range");
    }

    state.apply_rotation(Mode::ArmB, {angles.outer_rad});
    state.apply_pbs(Mode::ArmB, Mode::ArmB, Mode::Inner);

    for (int n = 1; n <= p.inner_cycles; ++n) {
        inner_cycle(state, p, m, n, angles);
    }

    if (p.policy == ChannelPolicy::Blocked) {
        // Surviving V rejoins the arm; any H residue (zero at protocol
        // angles) exits toward D_3.
        state.apply_pbs(Mode::Inner, Mode::Inner, Mode::ArmB);
        state.absorb(Mode::Inner, Mode::SinkD3, m);
    } else {
        state.absorb(Mode::Inner, Mode::SinkD3, m);
    }
}

CqzeOutcome run_cqze(const CqzeParams& p, double in_amp) {
    return run_cqze(p, in_amp, protocol_angles(p));
}

CqzeOutcome run_cqze(const CqzeParams& p, double in_amp, const CycleAngles& angles) {
    validate_params(p);
    if (!(std::abs(in_amp) <= 1.0)) {
        throw std::invalid_argument("input amplitude magnitude must be <= 1");
    }

    PhotonState state = PhotonState::single(Mode::ArmB, Polarization::H, in_amp);
    for (int m = 1; m <= p.outer_cycles; ++m) {
        outer_cycle(state, p, m, angles);
    }

    CqzeOutcome out;
    out.out_h = real_part(state.amplitude(Mode::ArmB, Polarization::H));
    out.out_v = real_part(state.amplitude(Mode::ArmB, Polarization::V));
    out.ledger = state.ledger();
    return out;
}

BlockedAmplitudes closed_form_blocked(int outer_cycles, int inner_cycles) {
    if (outer_cycles < 1 || inner_cycles < 1) {
        throw std::invalid_argument("cycle counts must be >= 1");
    }
    const double a = std::numbers::pi / (2.0 * outer_cycles);
    const double b = std::numbers::pi / (2.0 * inner_cycles);
    const double ca = std::cos(a);
    const double sa = std::sin(a);
    const double survival = std::pow(std::cos(b), inner_cycles);

    double x = 1.0;
    double y = 0.0;
    for (int m = 0; m < outer_cycles; ++m) {
        const double next_x = ca * x - sa * y;
        const double next_y = (sa * x + ca * y) * survival;
        x = next_x;
        y = next_y;
    }
    return {x, y};
}

double closed_form_open(int outer_cycles) {
    if (outer_cycles < 1) throw std::invalid_argument("cycle counts must be >= 1");
    return std::pow(std::cos(std::numbers::pi / (2.0 * outer_cycles)), outer_cycles);
}

}  // namespace zeno
