#ifndef ZENO_REPORT_HPP
#define ZENO_REPORT_HPP

#include <string>

#include "json.hpp"
#include "zeno/audit.hpp"
#include "zeno/experiment.hpp"

namespace zeno {

/// Shortest decimal form with `digits` significant digits ("%.12g" style).
std::string format_sig(double value, int digits = 12);

nlohmann::json to_json(const ExperimentResult& result);
nlohmann::json to_json(const AuditReport& report);

/// Sweep CSV. Header is exactly
///   M,N,X,Y,p_d1,p_d2,p_loss,visibility
/// one row per grid point, outer-major, 12 significant digits, LF endings.
std::string grid_csv(const VisibilityGrid& grid);

/// Single-record CSV for one scenario run (plus counts when sampled).
std::string result_csv(const ExperimentResult& result);
std::string result_csv(const ExperimentResult& result, const Counts& counts,
                       const ShotConfig& config);

}  // namespace zeno

#endif
