#ifndef ZENO_AUDIT_HPP
#define ZENO_AUDIT_HPP

#include <array>
#include <cstdint>

#include "zeno/experiment.hpp"

namespace zeno {

enum class Detector : int { D1 = 0, D2 = 1, D3 = 2, DB = 3 };
inline constexpr std::array<Detector, 4> kDetectors{Detector::D1, Detector::D2,
                                                    Detector::D3, Detector::DB};
const char* to_string(Detector d);

struct ShotConfig {
    std::int64_t shots = 1;
    std::uint64_t seed = 0;
};

struct Counts {
    std::array<std::int64_t, 4> n{};  // indexed by Detector

    std::int64_t total() const { return n[0] + n[1] + n[2] + n[3]; }
    std::int64_t operator[](Detector d) const { return n[static_cast<int>(d)]; }
    bool operator==(const Counts&) const = default;
};

/// Multinomial detector counts for `shots` trials of the given result.
/// Reproducible: counts depend only on (seed, scenario, params, shots).
/// The default entry point draws shots in parallel; the serial variant is
/// the reference (identical counts, shot i consumes variate i either way).
Counts sample_outcomes(const ExperimentResult& result, const ShotConfig& config);
Counts sample_outcomes_serial(const ExperimentResult& result, const ShotConfig& config);

/// Per-detector z = (count - shots*p) / sqrt(shots*p*(1-p)).
/// Degenerate ports (p of exactly 0 or 1) admit no deviation: an exact count
/// gives z = 0, any miss is flagged as +/-infinity.
std::array<double, 4> compare_frequencies(const Counts& counts,
                                          const ExperimentResult& result);

struct AuditReport {
    ExperimentResult result;
    double tagged_mass_d1 = 0.0;    // channel-visiting mass reaching D1
    double tagged_mass_d2 = 0.0;    // channel-visiting mass reaching D2
    double tagged_mass_lost = 0.0;  // channel-visiting mass absorbed at sinks
    bool sampled = false;
    ShotConfig config;
    Counts counts;
    std::array<double, 4> z_scores{};
};

/**
 * Counterfactuality audit: run the tagged circuit and report how much of the
 * probability mass that ever occupied the channel ends up at each of the
 * detectors versus absorbed. Only defined for the scenarios that use the
 * channel.
 */
AuditReport counterfactual_audit(Scenario s, const CqzeParams& params);
AuditReport counterfactual_audit(Scenario s, const CqzeParams& params,
                                 const ShotConfig& config);

}  // namespace zeno

#endif
