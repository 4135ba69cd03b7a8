#pragma once

#include <string>

#include <json.hpp>

#include "dslap/analysis.hpp"
#include "dslap/ds_matrix.hpp"
#include "dslap/heat.hpp"

namespace dslap {

/// {"n":, "h":, "mode":, "engine":, "rows":[[...]]} with exact entries as
/// reduced "p/q" strings and float entries as numbers.
nlohmann::json matrix_to_json(const DSMatrix& b);

/// One row per line, comma separated; exact entries as "p/q", float entries
/// with 17 significant digits.
std::string matrix_to_csv(const DSMatrix& b);

nlohmann::json check_to_json(const CheckResult& r);
nlohmann::json bounds_to_json(const BoundsReport& rep);
nlohmann::json centrality_to_json(const CentralityReport& rep);

/// Header "step,vertex,value", one line per recorded vertex value.
std::string trajectory_to_csv(const HeatTrajectory& traj);

/// Header "step,mass,max,min,dist_to_mean", one line per recorded step.
std::string summary_to_csv(const HeatTrajectory& traj);

}  // namespace dslap
