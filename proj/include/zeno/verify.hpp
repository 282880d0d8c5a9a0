#ifndef ZENO_VERIFY_HPP
#define ZENO_VERIFY_HPP

#include <string>
#include <vector>

namespace zeno {

struct VerifyOptions {
    // Self-test hooks: detune the machine's rotation angles so the suite can
    // demonstrate that it fails when the engine drifts from the closed forms.
    double outer_angle_offset = 0.0;
    double inner_angle_offset = 0.0;
    int grid_outer_max = 10;
    int grid_inner_max = 50;
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Full invariant suite: engine vs closed forms over the grid, conservation,
/// port/formula visibility agreement, baseline exactness, blocked-channel
/// counterfactuality, the Zeno limit, and the visibility regressions.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace zeno

#endif
