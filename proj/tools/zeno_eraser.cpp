#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zeno/audit.hpp"
#include "zeno/experiment.hpp"
#include "zeno/report.hpp"
#include "zeno/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerifyFailed = 2;
constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ZENO_ERASER_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw std::invalid_argument("ZENO_ERASER_SEED is not an integer");
        }
        return v;
    }
    return kDefaultSeed;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + *path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + *path);
}

zeno::Scenario parse_scenario_or_throw(const std::string& name) {
    if (auto s = zeno::parse_scenario(name)) return *s;
    throw std::invalid_argument("unknown scenario: " + name);
}

std::optional<zeno::CqzeParams> make_params(const std::optional<int>& outer,
                                            const std::optional<int>& inner) {
    if (!outer || !inner) return std::nullopt;
    return zeno::CqzeParams{*outer, *inner, zeno::ChannelPolicy::Blocked};
}

int cmd_run(const std::string& scenario_name, std::optional<int> outer,
            std::optional<int> inner, std::optional<std::int64_t> shots,
            std::optional<std::uint64_t> seed, const std::string& format,
            const std::optional<std::string>& output) {
    const zeno::Scenario scenario = parse_scenario_or_throw(scenario_name);
    auto params = make_params(outer, inner);
    if (zeno::needs_cqze(scenario) && !params) {
        throw std::invalid_argument("scenario requires CQZE parameters");
    }
    const zeno::ExperimentResult result = zeno::run_scenario(scenario, params);

    std::optional<zeno::Counts> counts;
    zeno::ShotConfig config;
    if (shots) {
        config = {*shots, resolve_seed(seed)};
        counts = zeno::sample_outcomes(result, config);
    }

    if (format == "csv") {
        emit(counts ? zeno::result_csv(result, *counts, config)
                    : zeno::result_csv(result),
             output);
    } else {
        nlohmann::json j = zeno::to_json(result);
        if (counts) {
            j["shots"] = counts->total();
            j["seed"] = config.seed;
            nlohmann::json c;
            for (zeno::Detector d : zeno::kDetectors) c[to_string(d)] = (*counts)[d];
            j["counts"] = c;
        }
        emit(j.dump(2) + "\n", output);
    }
    return kExitOk;
}

int cmd_sweep(int outer_max, int inner_max, const std::optional<std::string>& output) {
    emit(zeno::grid_csv(zeno::sweep_visibility(outer_max, inner_max)), output);
    return kExitOk;
}

int cmd_audit(const std::string& scenario_name, std::optional<int> outer,
              std::optional<int> inner, std::int64_t shots,
              std::optional<std::uint64_t> seed,
              const std::optional<std::string>& output) {
    const zeno::Scenario scenario = parse_scenario_or_throw(scenario_name);
    if (!zeno::needs_cqze(scenario)) {
        throw std::invalid_argument("audit undefined without channel");
    }
    const auto params = make_params(outer, inner);
    if (!params) throw std::invalid_argument("scenario requires CQZE parameters");

    const zeno::AuditReport report = zeno::counterfactual_audit(
        scenario, *params, zeno::ShotConfig{shots, resolve_seed(seed)});
    emit(zeno::to_json(report).dump(2) + "\n", output);
    return kExitOk;
}

int cmd_verify(double perturb_outer, double perturb_inner, int outer_max,
               int inner_max) {
    zeno::VerifyOptions options;
    options.outer_angle_offset = perturb_outer;
    options.inner_angle_offset = perturb_inner;
    options.grid_outer_max = outer_max;
    options.grid_inner_max = inner_max;

    const auto checks = zeno::run_verification(options);
    for (const auto& c : checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
                  << "\n";
    }
    if (!zeno::all_passed(checks)) {
        std::cout << "verification failed\n";
        return kExitVerifyFailed;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counterfactual quantum eraser: CQZE interferometer simulator"};
    app.require_subcommand(1);

    std::string scenario;
    std::optional<int> outer, inner;
    std::optional<std::int64_t> shots;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::optional<std::string> output;

    auto* run = app.add_subcommand("run", "Evaluate one scenario");
    run->add_option("--scenario", scenario,
                    "baseline-no-tag | baseline-tagged | erase-blocked | no-erase-open")
        ->required();
    run->add_option("--outer,-M", outer, "outer cycles M")->check(CLI::PositiveNumber);
    run->add_option("--inner,-N", inner, "inner cycles N")->check(CLI::PositiveNumber);
    run->add_option("--shots", shots, "also draw detector counts")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "RNG seed (fallback: ZENO_ERASER_SEED, then 1)");
    run->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--output,-o", output, "write to file instead of stdout");

    int outer_max = 10;
    int inner_max = 50;
    auto* sweep = app.add_subcommand("sweep", "Visibility grid as CSV");
    sweep->add_option("--outer-max", outer_max, "largest M (default 10)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--inner-max", inner_max, "largest N (default 50)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--output,-o", output, "write to file instead of stdout");

    std::int64_t audit_shots = 1'000'000;
    auto* audit = app.add_subcommand("audit", "Counterfactuality audit + shot counts");
    audit->add_option("--scenario", scenario, "erase-blocked | no-erase-open")
        ->required();
    audit->add_option("--outer,-M", outer, "outer cycles M")->check(CLI::PositiveNumber);
    audit->add_option("--inner,-N", inner, "inner cycles N")->check(CLI::PositiveNumber);
    audit->add_option("--shots", audit_shots, "shot count (default 1e6)")
        ->check(CLI::PositiveNumber);
    audit->add_option("--seed", seed, "RNG seed (fallback: ZENO_ERASER_SEED, then 1)");
    audit->add_option("--output,-o", output, "write to file instead of stdout");

    double perturb_outer = 0.0;
    double perturb_inner = 0.0;
    int verify_outer_max = 10;
    int verify_inner_max = 50;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--perturb-outer", perturb_outer,
                       "detune the outer rotation (self-test hook, radians)");
    verify->add_option("--perturb-inner", perturb_inner,
                       "detune the inner rotation (self-test hook, radians)");
    verify->add_option("--outer-max", verify_outer_max, "grid bound for M");
    verify->add_option("--inner-max", verify_inner_max, "grid bound for N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run '" << (argv[0] ? argv[0] : "zeno_eraser")
                  << " --help' for usage\n";
        return kExitValidation;
    }

    try {
        if (app.got_subcommand(run)) {
            return cmd_run(scenario, outer, inner, shots, seed, format, output);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(outer_max, inner_max, output);
        }
        if (app.got_subcommand(audit)) {
            return cmd_audit(scenario, outer, inner, audit_shots, seed, output);
        }
        return cmd_verify(perturb_outer, perturb_inner, verify_outer_max,
                          verify_inner_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
