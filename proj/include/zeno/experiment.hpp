#ifndef ZENO_EXPERIMENT_HPP
#define ZENO_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "zeno/engine.hpp"
#include "zeno/optics.hpp"

namespace zeno {

enum class Scenario {
    BaselineNoTag,   // Michelson only, rotator off: full interference
    BaselineTagged,  // Michelson only, rotator on: which-path tag imprinted
    EraseBlocked,    // CQZE in ArmB, channel blocked: tag erased remotely
    NoEraseOpen,     // CQZE in ArmB, channel open: tag survives
};

constexpr bool needs_cqze(Scenario s) {
    return s == Scenario::EraseBlocked || s == Scenario::NoEraseOpen;
}

const char* scenario_name(Scenario s);                 // kebab-case
std::optional<Scenario> parse_scenario(const std::string& name);

struct ExperimentResult {
    double p_d1 = 0.0;
    double p_d2 = 0.0;
    double p_d3 = 0.0;
    double p_db = 0.0;
    double visibility = 0.0;  // (p_d2 - p_d1) / (p_d2 + p_d1)
    Scenario scenario = Scenario::BaselineNoTag;
    std::optional<CqzeParams> params;

    double total() const { return p_d1 + p_d2 + p_d3 + p_db; }
};

/// Michelson-only probabilities. Exact by algebra: with the rotator off the
/// arms recombine in phase and the bright port takes everything; with it on,
/// the H and V components cannot interfere and the ports split evenly.
ExperimentResult baseline_probabilities(bool spr_on);

/// Run the element-level circuit for any scenario and return the final state
/// (ports populated, losses in the ledger). Baselines ignore `params`.
PhotonState run_circuit(Scenario s, const CqzeParams* params,
                        const CycleAngles* angles = nullptr);

/// Read detector probabilities and visibility off a final circuit state.
ExperimentResult result_from_state(const PhotonState& state, Scenario s,
                                   std::optional<CqzeParams> params);

/// Full experiment. Baselines report the exact algebraic probabilities; the
/// CQZE scenarios run the element-level circuit.
ExperimentResult run_scenario(Scenario s,
                              std::optional<CqzeParams> params = std::nullopt);

/// Interference visibility 2Y / (X^2 + Y^2 + 1) of the blocked-channel
/// output against the flipped reference arm.
double visibility(double x, double y);

struct GridRow {
    int outer_cycles;
    int inner_cycles;
    double x;
    double y;
    double visibility;
};

struct VisibilityGrid {
    std::vector<GridRow> rows;  // outer-major, inner ascending
};

/// Visibility over outer in [1..m_max], inner in [1..n_max] from the closed
/// forms. The default entry point runs the rows in parallel; the serial
/// variant is the reference the tests compare against (outputs are
/// bit-identical).
VisibilityGrid sweep_visibility(int m_max, int n_max);
VisibilityGrid sweep_visibility_serial(int m_max, int n_max);

}  // namespace zeno

#endif
