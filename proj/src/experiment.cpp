#include "zeno/experiment.hpp"

#include <cmath>
#include <stdexcept>

namespace zeno {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::BaselineNoTag: return "baseline-no-tag";
        case Scenario::BaselineTagged: return "baseline-tagged";
        case Scenario::EraseBlocked: return "erase-blocked";
        case Scenario::NoEraseOpen: return "no-erase-open";
    }
    throw std::invalid_argument("no such scenario");
}

std::optional<Scenario> parse_scenario(const std::string& name) {
    for (Scenario s : {Scenario::BaselineNoTag, Scenario::BaselineTagged,
                       Scenario::EraseBlocked, Scenario::NoEraseOpen}) {
        if (name == scenario_name(s)) return s;
    }
    return std::nullopt;
}

ExperimentResult baseline_probabilities(bool spr_on) {
    ExperimentResult r;
    r.scenario = spr_on ? Scenario::BaselineTagged : Scenario::BaselineNoTag;
    if (spr_on) {
        r.p_d1 = 0.5;
        r.p_d2 = 0.5;
        r.visibility = 0.0;
    } else {
        r.p_d1 = 0.0;
        r.p_d2 = 1.0;
        r.visibility = 1.0;
    }
    return r;
}

PhotonState run_circuit(Scenario s, const CqzeParams* params,
                        const CycleAngles* angles) {
    PhotonState state = PhotonState::single(Mode::Source, Polarization::H);
    state.apply_bs(Mode::Source, Mode::Vacuum, Mode::ArmA, Mode::ArmB);

    if (s != Scenario::BaselineNoTag) {
        state.apply_polarization_flip(Mode::ArmA);
    }

    if (needs_cqze(s)) {
        if (params == nullptr) {
            throw std::invalid_argument("scenario requires CQZE parameters");
        }
        CqzeParams p = *params;
        p.policy = (s == Scenario::EraseBlocked) ? ChannelPolicy::Blocked
                                                 : ChannelPolicy::Open;
        const CycleAngles a = angles ? *angles : protocol_angles(p);
        for (int m = 1; m <= p.outer_cycles; ++m) {
            outer_cycle(state, p, m, a);
        }
    }

    state.apply_bs(Mode::ArmA, Mode::ArmB, Mode::OutD2, Mode::OutD1);
    return state;
}

ExperimentResult result_from_state(const PhotonState& state, Scenario s,
                                   std::optional<CqzeParams> params) {
    ExperimentResult r;
    r.scenario = s;
    r.params = params;
    r.p_d1 = state.mass(Mode::OutD1);
    r.p_d2 = state.mass(Mode::OutD2);
    r.p_d3 = state.ledger_total(Mode::SinkD3);
    r.p_db = state.ledger_total(Mode::SinkDB);
    const double denom = r.p_d1 + r.p_d2;
    r.visibility = denom > 0.0 ? (r.p_d2 - r.p_d1) / denom : 0.0;
    return r;
}

ExperimentResult run_scenario(Scenario s, std::optional<CqzeParams> params) {
    if (!needs_cqze(s)) {
        return baseline_probabilities(s == Scenario::BaselineTagged);
    }
    if (!params) {
        throw std::invalid_argument("scenario requires CQZE parameters");
    }
    return result_from_state(run_circuit(s, &*params), s, params);
}

double visibility(double x, double y) {
    const double mass = x * x + y * y;
    if (!(mass <= 1.0 + 1e-9)) {
        throw std::invalid_argument("amplitudes exceed unit norm");
    }
    return 2.0 * y / (mass + 1.0);
}

namespace {

GridRow grid_row(int outer, int inner) {
    const BlockedAmplitudes amp = closed_form_blocked(outer, inner);
    return {outer, inner, amp.x, amp.y, visibility(amp.x, amp.y)};
}

}  // namespace

VisibilityGrid sweep_visibility(int m_max, int n_max) {
    if (m_max < 1 || n_max < 1) throw std::invalid_argument("sweep bounds must be >= 1");
    VisibilityGrid grid;
    grid.rows.resize(static_cast<std::size_t>(m_max) * n_max);

#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < m_max * n_max; ++idx) {
        grid.rows[idx] = grid_row(idx / n_max + 1, idx % n_max + 1);
    }
    return grid;
}

VisibilityGrid sweep_visibility_serial(int m_max, int n_max) {
    if (m_max < 1 || n_max < 1) throw std::invalid_argument("sweep bounds must be >= 1");
    VisibilityGrid grid;
    grid.rows.reserve(static_cast<std::size_t>(m_max) * n_max);
    for (int outer = 1; outer <= m_max; ++outer) {
        for (int inner = 1; inner <= n_max; ++inner) {
            grid.rows.push_back(grid_row(outer, inner));
        }
    }
    return grid;
}

}  // namespace zeno
