#ifndef ZENO_OPTICS_HPP
#define ZENO_OPTICS_HPP

#include <complex>
#include <cstdint>
#include <map>

namespace zeno {

// Spatial modes of the eraser circuit. Sink modes are terminal: probability
// that reaches them lives in the loss ledger, never in an amplitude.
enum class Mode : std::uint8_t {
    Source,   // photon injection port
    Vacuum,   // permanently empty beam-splitter input
    ArmA,     // Michelson arm toward MR_A (carries the which-path flip)
    ArmB,     // Michelson arm toward the CQZE machine
    Inner,    // inner interferometer of the CQZE
    Channel,  // transmission channel between the parties
    OutD1,    // dark output port (via the circulator)
    OutD2,    // bright output port
    SinkD3,   // loss detector at the inner-interferometer exit
    SinkDB,   // loss detector behind the blocked channel
};

enum class Polarization : std::uint8_t { H = 0, V = 1 };

constexpr bool is_sink(Mode m) { return m == Mode::SinkD3 || m == Mode::SinkDB; }

const char* to_string(Mode m);
const char* to_string(Polarization p);

/// Rotation angle in radians; the protocol only ever uses pi/(2M) and pi/(2N).
struct RotationAngle {
    double radians = 0.0;
};

using Amp = std::complex<double>;

// One amplitude component. `channel_visits` counts how many times this
// component has occupied the channel; it is the which-channel record used by
// the counterfactuality audit. Components with different visit counts are
// orthogonal records and never recombine, which keeps every element exactly
// norm-preserving. The public surface only ever distinguishes tagged
// (visits > 0) from untagged (visits == 0).
struct ComponentKey {
    Mode mode;
    Polarization pol;
    std::uint32_t channel_visits;
    auto operator<=>(const ComponentKey&) const = default;
};

struct LedgerKey {
    Mode sink;
    std::int32_t cycle;
    auto operator<=>(const LedgerKey&) const = default;
};

struct LedgerEntry {
    double probability = 0.0;  // squared amplitude absorbed at (sink, cycle)
    double tagged = 0.0;       // portion of it that had visited the channel
};

/**
 * Sparse single-photon polarization state plus a loss ledger.
 *
 * Invariants maintained by every operation:
 *   - norm_sq() + ledger_total() is constant (exact up to rounding),
 *   - all amplitudes stay finite,
 *   - channel visit counts never decrease (tags are monotone).
 *
 * States are plain values; copying is cheap and thread-safe.
 */
class PhotonState {
public:
    PhotonState() = default;

    static PhotonState single(Mode m, Polarization p, Amp a = Amp{1.0, 0.0});

    void set_amplitude(Mode m, Polarization p, Amp a, std::uint32_t visits = 0);

    /// Coherent amplitude at (mode, pol), summed over all visit sectors.
    Amp amplitude(Mode m, Polarization p) const;
    /// Coherent amplitude restricted to tagged (visits > 0) or untagged sectors.
    Amp amplitude(Mode m, Polarization p, bool tagged) const;

    /// Squared-amplitude mass on a mode (both polarizations, all sectors).
    double mass(Mode m) const;
    /// Mass restricted to tagged or untagged sectors.
    double mass(Mode m, bool tagged) const;

    double norm_sq() const;

    double ledger_total() const;
    double ledger_total(Mode sink) const;
    double tagged_ledger_total() const;
    const std::map<LedgerKey, LedgerEntry>& ledger() const { return ledger_; }

    /// norm_sq() + ledger_total(); equals the injected probability at all times.
    double conservation_total() const { return norm_sq() + ledger_total(); }

    /// |H> -> cos t |H> + sin t |V>,  |V> -> -sin t |H> + cos t |V> on `m` only.
    void apply_rotation(Mode m, RotationAngle theta);

    /// Exact half-turn: |H> -> |V>, |V> -> -|H>. Used for the switchable
    /// polarization rotator so baseline probabilities are exact, not
    /// cos(pi/2)-close to exact.
    void apply_polarization_flip(Mode m);

    /// Polarizing beam splitter: H transmits to h_out, V reflects to v_out.
    /// h_out or v_out may equal `in` (the component stays put).
    void apply_pbs(Mode in, Mode h_out, Mode v_out);

    /// Symmetric 50/50 beam splitter: bright = (a+b)/sqrt2, dark = (a-b)/sqrt2
    /// per (polarization, sector). The bright port is the constructive one.
    void apply_bs(Mode a, Mode b, Mode out_bright, Mode out_dark);

    /// Move all squared amplitude on `m` into ledger[sink, cycle].
    /// Absorbing an empty mode leaves the ledger untouched.
    void absorb(Mode m, Mode sink, std::int32_t cycle);

    /// Record a channel visit on every component currently in `m`.
    /// Idempotent in the tagged/untagged view.
    void mark_channel(Mode m);

    const std::map<ComponentKey, Amp>& components() const { return amps_; }

private:
    std::map<ComponentKey, Amp> amps_;
    std::map<LedgerKey, LedgerEntry> ledger_;

    void put(const ComponentKey& k, Amp a);
    void check_finite() const;
};

}  // namespace zeno

#endif
