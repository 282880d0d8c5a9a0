#include "zeno/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zeno/audit.hpp"
#include "zeno/engine.hpp"
#include "zeno/experiment.hpp"
#include "zeno/report.hpp"

namespace zeno {

namespace {

constexpr double kTol = 1e-12;

CycleAngles angles_for(const CqzeParams& p, const VerifyOptions& opt) {
    CycleAngles a = protocol_angles(p);
    a.outer_rad += opt.outer_angle_offset;
    a.inner_rad += opt.inner_angle_offset;
    return a;
}

struct GridErrors {
    double engine_blocked = 0.0;
    double engine_open = 0.0;
    double conservation = 0.0;
    double port_agreement = 0.0;
    bool open_v_exact = true;
    bool open_symmetry = true;
    bool counterfactual = true;
};

GridErrors scan_grid(const VerifyOptions& opt) {
    GridErrors err;
    const int total = opt.grid_outer_max * opt.grid_inner_max;

    double e_blocked = 0.0, e_open = 0.0, e_cons = 0.0, e_port = 0.0;
    int v_exact = 1, symmetric = 1, counterfactual = 1;

#pragma omp parallel for schedule(dynamic)                                     \
    reduction(max : e_blocked, e_open, e_cons, e_port)                         \
    reduction(min : v_exact, symmetric, counterfactual)
    for (int idx = 0; idx < total; ++idx) {
        const int m = idx / opt.grid_inner_max + 1;
        const int n = idx % opt.grid_inner_max + 1;

        CqzeParams blocked{m, n, ChannelPolicy::Blocked};
        const CqzeOutcome run_b = run_cqze(blocked, 1.0, angles_for(blocked, opt));
        const BlockedAmplitudes ref = closed_form_blocked(m, n);
        e_blocked = std::max({e_blocked, std::abs(run_b.out_h - ref.x),
                              std::abs(run_b.out_v - ref.y)});
        e_cons = std::max(e_cons, std::abs(run_b.out_h * run_b.out_h +
                                           run_b.out_v * run_b.out_v +
                                           run_b.ledger_total() - 1.0));

        CqzeParams open{m, n, ChannelPolicy::Open};
        const CqzeOutcome run_o = run_cqze(open, 1.0, angles_for(open, opt));
        e_open = std::max(e_open, std::abs(run_o.out_h - closed_form_open(m)));
        if (run_o.out_v != 0.0) v_exact = 0;
        e_cons = std::max(e_cons, std::abs(run_o.out_h * run_o.out_h +
                                           run_o.ledger_total() - 1.0));

        const CycleAngles a = angles_for(blocked, opt);
        const ExperimentResult erase = result_from_state(
            run_circuit(Scenario::EraseBlocked, &blocked, &a), Scenario::EraseBlocked,
            blocked);
        e_cons = std::max(e_cons, std::abs(erase.total() - 1.0));
        e_port = std::max(e_port,
                          std::abs(erase.visibility - visibility(ref.x, ref.y)));

        const ExperimentResult open_r = result_from_state(
            run_circuit(Scenario::NoEraseOpen, &open, &a), Scenario::NoEraseOpen, open);
        e_cons = std::max(e_cons, std::abs(open_r.total() - 1.0));
        if (open_r.p_d1 != open_r.p_d2) symmetric = 0;

        const AuditReport audit = counterfactual_audit(Scenario::EraseBlocked, blocked);
        if (audit.tagged_mass_d1 != 0.0 || audit.tagged_mass_d2 != 0.0) {
            counterfactual = 0;
        }
    }

    err.engine_blocked = e_blocked;
    err.engine_open = e_open;
    err.conservation = e_cons;
    err.port_agreement = e_port;
    err.open_v_exact = v_exact != 0;
    err.open_symmetry = symmetric != 0;
    err.counterfactual = counterfactual != 0;
    return err;
}

void add(std::vector<CheckResult>& out, const std::string& name, bool passed,
         const std::string& detail) {
    out.push_back({name, passed, detail});
}

std::string max_err(double value) {
    return "max error " + format_sig(value, 3);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> checks;
    const GridErrors err = scan_grid(options);

    add(checks, "engine-vs-recursion-blocked", err.engine_blocked < kTol,
        max_err(err.engine_blocked));
    add(checks, "engine-vs-closed-form-open",
        err.engine_open < kTol && err.open_v_exact,
        max_err(err.engine_open) + (err.open_v_exact ? "" : ", V residue nonzero"));
    add(checks, "probability-conservation", err.conservation < kTol,
        max_err(err.conservation));
    add(checks, "visibility-port-vs-formula", err.port_agreement < kTol,
        max_err(err.port_agreement));
    add(checks, "open-channel-port-symmetry", err.open_symmetry,
        err.open_symmetry ? "p_d1 == p_d2 exactly" : "ports differ");
    add(checks, "blocked-channel-counterfactuality", err.counterfactual,
        err.counterfactual ? "tagged mass at D1/D2 is exactly zero"
                           : "tagged mass leaked to a detector");

    {
        const ExperimentResult no_tag = baseline_probabilities(false);
        const ExperimentResult tagged = baseline_probabilities(true);
        const bool ok = no_tag.p_d2 == 1.0 && no_tag.p_d1 == 0.0 &&
                        no_tag.visibility == 1.0 && tagged.p_d1 == 0.5 &&
                        tagged.p_d2 == 0.5 && tagged.visibility == 0.0;
        add(checks, "baseline-exactness", ok,
            ok ? "p_d2 = 1 and even split are exact" : "baseline drifted");
    }

    {
        CqzeParams p{2, 4, ChannelPolicy::Blocked};
        const CycleAngles a = angles_for(p, options);
        const ExperimentResult r = result_from_state(
            run_circuit(Scenario::EraseBlocked, &p, &a), Scenario::EraseBlocked, p);
        add(checks, "visibility-regression-89",
            std::abs(r.visibility - 0.89) <= 0.005,
            "visibility(2,4) = " + format_sig(r.visibility, 6));
    }
    {
        CqzeParams p{2, 14, ChannelPolicy::Blocked};
        const CycleAngles a = angles_for(p, options);
        const ExperimentResult r = result_from_state(
            run_circuit(Scenario::EraseBlocked, &p, &a), Scenario::EraseBlocked, p);
        add(checks, "visibility-regression-99",
            std::abs(r.visibility - 0.99) <= 0.005,
            "visibility(2,14) = " + format_sig(r.visibility, 6));
    }

    {
        bool monotone = true;
        for (int m = 1; m <= options.grid_outer_max; ++m) {
            const BlockedAmplitudes lo = closed_form_blocked(m, 2);
            const BlockedAmplitudes hi = closed_form_blocked(m, 500);
            if (!(visibility(hi.x, hi.y) > visibility(lo.x, lo.y))) monotone = false;
        }
        const BlockedAmplitudes big = closed_form_blocked(2, 500);
        const double v = visibility(big.x, big.y);
        add(checks, "zeno-limit", monotone && v > 0.999,
            "visibility(2,500) = " + format_sig(v, 6));
    }

    return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

}  // namespace zeno
