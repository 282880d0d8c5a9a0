#ifndef ZENO_ENGINE_HPP
#define ZENO_ENGINE_HPP

#include <map>

#include "zeno/optics.hpp"

namespace zeno {

enum class ChannelPolicy { Blocked, Open };

/// M outer cycles, each containing N inner cycles.
struct CqzeParams {
    int outer_cycles = 2;   // M
    int inner_cycles = 14;  // N
    ChannelPolicy policy = ChannelPolicy::Blocked;
};

/// Rotation angles driving one run of the machine. The protocol values are
/// pi/(2M) and pi/(2N); offsets exist so the verification suite can prove it
/// notices a detuned machine.
struct CycleAngles {
    double outer_rad;
    double inner_rad;
};

CycleAngles protocol_angles(const CqzeParams& p);

struct CqzeOutcome {
    double out_h = 0.0;  // unnormalized H amplitude exiting (X)
    double out_v = 0.0;  // unnormalized V amplitude exiting (Y)
    std::map<LedgerKey, LedgerEntry> ledger;

    double ledger_total() const;
    double ledger_total(Mode sink) const;
    double tagged_ledger_total() const;
};

/// Unnormalized (H, V) amplitudes exiting the blocked-channel machine.
struct BlockedAmplitudes {
    double x = 0.0;
    double y = 0.0;
};

/**
 * One inner cycle on Mode::Inner: rotate by the inner angle, send the H part
 * down the channel, record the channel visit, then either absorb it at D_B
 * (Blocked) or reflect it off the far mirror and recombine (Open).
 *
 * Ledger indexing: D_B entries use cycle = (m-1)*N + n, 1-based.
 */
void inner_cycle(PhotonState& state, const CqzeParams& p, int m, int n,
                 const CycleAngles& angles);

/**
 * One outer cycle on Mode::ArmB: rotate by the outer angle, feed the V part
 * into the inner interferometer, run N inner cycles, then rejoin the survivor
 * (Blocked) or absorb the inner content at D_3 (Open). D_3 entries use
 * cycle = m.
 */
void outer_cycle(PhotonState& state, const CqzeParams& p, int m,
                 const CycleAngles& angles);

/// Run the full machine on an H photon of amplitude `in_amp` entering ArmB.
CqzeOutcome run_cqze(const CqzeParams& p, double in_amp);
CqzeOutcome run_cqze(const CqzeParams& p, double in_amp, const CycleAngles& angles);

/**
 * Closed form for the blocked channel, independent of the element-level
 * machine: starting from (X, Y) = (1, 0), each outer cycle applies
 *
 *   X <- cos(pi/2M) X - sin(pi/2M) Y
 *   Y <- (sin(pi/2M) X + cos(pi/2M) Y) * cos^N(pi/2N)
 */
BlockedAmplitudes closed_form_blocked(int outer_cycles, int inner_cycles);

/// Closed form for the open channel: surviving H amplitude cos^M(pi/2M).
double closed_form_open(int outer_cycles);

}  // namespace zeno

#endif
