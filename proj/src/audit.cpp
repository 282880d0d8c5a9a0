#include "zeno/audit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zeno/rng.hpp"

namespace zeno {

namespace {

CounterRng stream_for(const ExperimentResult& result, std::uint64_t seed) {
    const std::uint64_t scenario_id = static_cast<std::uint64_t>(result.scenario);
    const std::uint64_t m = result.params ? result.params->outer_cycles : 0;
    const std::uint64_t n = result.params ? result.params->inner_cycles : 0;
    return CounterRng::derive(seed, {scenario_id, m, n});
}

std::array<double, 4> probabilities(const ExperimentResult& result) {
    return {result.p_d1, result.p_d2, result.p_d3, result.p_db};
}

std::array<double, 4> cumulative(const ExperimentResult& result) {
    const auto p = probabilities(result);
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("invalid probability set");
        }
    }
    if (std::abs(result.total() - 1.0) > 1e-9) {
        throw std::invalid_argument("invalid probability set");
    }
    std::array<double, 4> cdf{};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    cdf[3] = std::numeric_limits<double>::infinity();  // catch rounding residue
    return cdf;
}

int draw(const std::array<double, 4>& cdf, double u) {
    for (int i = 0; i < 3; ++i) {
        if (u < cdf[i]) return i;
    }
    return 3;
}

void validate_shots(const ShotConfig& config) {
    if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
}

}  // namespace

const char* to_string(Detector d) {
    switch (d) {
        case Detector::D1: return "d1";
        case Detector::D2: return "d2";
        case Detector::D3: return "d3";
        case Detector::DB: return "d_b";
    }
    throw std::invalid_argument("no such detector");
}

Counts sample_outcomes(const ExperimentResult& result, const ShotConfig& config) {
    validate_shots(config);
    const auto cdf = cumulative(result);
    const CounterRng rng = stream_for(result, config.seed);

    std::int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
#pragma omp parallel for schedule(static) reduction(+ : c0, c1, c2, c3)
    for (std::int64_t i = 0; i < config.shots; ++i) {
        switch (draw(cdf, rng.uniform(static_cast<std::uint64_t>(i)))) {
            case 0: ++c0; break;
            case 1: ++c1; break;
            case 2: ++c2; break;
            default: ++c3; break;
        }
    }
    return Counts{{c0, c1, c2, c3}};
}

Counts sample_outcomes_serial(const ExperimentResult& result, const ShotConfig& config) {
    validate_shots(config);
    const auto cdf = cumulative(result);
    const CounterRng rng = stream_for(result, config.seed);

    Counts counts;
    for (std::int64_t i = 0; i < config.shots; ++i) {
        ++counts.n[draw(cdf, rng.uniform(static_cast<std::uint64_t>(i)))];
    }
    return counts;
}

std::array<double, 4> compare_frequencies(const Counts& counts,
                                          const ExperimentResult& result) {
    const std::int64_t shots = counts.total();
    if (shots <= 0) throw std::invalid_argument("counts are empty");

    const auto p = probabilities(result);
    std::array<double, 4> z{};
    for (int i = 0; i < 4; ++i) {
        const double expected = static_cast<double>(shots) * p[i];
        const double diff = static_cast<double>(counts.n[i]) - expected;
        if (p[i] <= 0.0 || p[i] >= 1.0) {
            // Degenerate port: only the exact count is consistent.
            z[i] = diff == 0.0
                       ? 0.0
                       : std::copysign(std::numeric_limits<double>::infinity(), diff);
        } else {
            z[i] = diff / std::sqrt(expected * (1.0 - p[i]));
        }
    }
    return z;
}

AuditReport counterfactual_audit(Scenario s, const CqzeParams& params) {
    if (!needs_cqze(s)) {
        throw std::invalid_argument("audit undefined without channel");
    }
    const PhotonState state = run_circuit(s, &params);

    AuditReport report;
    report.result = result_from_state(state, s, params);
    report.tagged_mass_d1 = state.mass(Mode::OutD1, true);
    report.tagged_mass_d2 = state.mass(Mode::OutD2, true);
    report.tagged_mass_lost = state.tagged_ledger_total();
    return report;
}

AuditReport counterfactual_audit(Scenario s, const CqzeParams& params,
                                 const ShotConfig& config) {
    AuditReport report = counterfactual_audit(s, params);
    report.sampled = true;
    report.config = config;
    report.counts = sample_outcomes(report.result, config);
    report.z_scores = compare_frequencies(report.counts, report.result);
    return report;
}

}  // namespace zeno
