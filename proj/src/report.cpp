#include "zeno/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace zeno {

std::string format_sig(double value, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

namespace {

nlohmann::json json_or_inf(double z) {
    if (std::isfinite(z)) return z;
    return z > 0 ? "inf" : "-inf";
}

void put_params(nlohmann::json& j, const std::optional<CqzeParams>& params) {
    if (params) {
        j["M"] = params->outer_cycles;
        j["N"] = params->inner_cycles;
    }
}

}  // namespace

nlohmann::json to_json(const ExperimentResult& result) {
    nlohmann::json j;
    j["scenario"] = scenario_name(result.scenario);
    put_params(j, result.params);
    j["p_d1"] = result.p_d1;
    j["p_d2"] = result.p_d2;
    j["p_d3"] = result.p_d3;
    j["p_db"] = result.p_db;
    j["visibility"] = result.visibility;
    return j;
}

nlohmann::json to_json(const AuditReport& report) {
    nlohmann::json j = to_json(report.result);
    j["tagged_mass_d1"] = report.tagged_mass_d1;
    j["tagged_mass_d2"] = report.tagged_mass_d2;
    j["tagged_mass_lost"] = report.tagged_mass_lost;
    if (report.sampled) {
        j["shots"] = report.counts.total();
        j["seed"] = report.config.seed;
        nlohmann::json counts, z;
        for (Detector d : kDetectors) {
            counts[to_string(d)] = report.counts[d];
            z[to_string(d)] = json_or_inf(report.z_scores[static_cast<int>(d)]);
        }
        j["counts"] = counts;
        j["z_scores"] = z;
    }
    return j;
}

std::string grid_csv(const VisibilityGrid& grid) {
    std::ostringstream out;
    out << "M,N,X,Y,p_d1,p_d2,p_loss,visibility\n";
    for (const GridRow& row : grid.rows) {
        const double x = row.x;
        const double y = row.y;
        const double p_d1 = ((1.0 - y) * (1.0 - y) + x * x) / 4.0;
        const double p_d2 = ((1.0 + y) * (1.0 + y) + x * x) / 4.0;
        const double p_loss = (1.0 - x * x - y * y) / 2.0;
        out << row.outer_cycles << ',' << row.inner_cycles << ','
            << format_sig(x) << ',' << format_sig(y) << ',' << format_sig(p_d1)
            << ',' << format_sig(p_d2) << ',' << format_sig(p_loss) << ','
            << format_sig(row.visibility) << '\n';
    }
    return out.str();
}

namespace {

std::string result_row(const ExperimentResult& result) {
    std::ostringstream out;
    out << scenario_name(result.scenario) << ',';
    if (result.params) out << result.params->outer_cycles;
    out << ',';
    if (result.params) out << result.params->inner_cycles;
    out << ',' << format_sig(result.p_d1) << ',' << format_sig(result.p_d2) << ','
        << format_sig(result.p_d3) << ',' << format_sig(result.p_db) << ','
        << format_sig(result.visibility);
    return out.str();
}

}  // namespace

std::string result_csv(const ExperimentResult& result) {
    return "scenario,M,N,p_d1,p_d2,p_d3,p_db,visibility\n" + result_row(result) + "\n";
}

std::string result_csv(const ExperimentResult& result, const Counts& counts,
                       const ShotConfig& config) {
    std::ostringstream out;
    out << "scenario,M,N,p_d1,p_d2,p_d3,p_db,visibility,shots,seed,c_d1,c_d2,c_d3,c_db\n"
        << result_row(result) << ',' << counts.total() << ',' << config.seed;
    for (Detector d : kDetectors) out << ',' << counts[d];
    out << '\n';
    return out.str();
}

}  // namespace zeno
