#include "dslap/io.hpp"

#include <cstdio>
#include <sstream>

namespace dslap {

namespace {

std::string float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json matrix_to_json(const DSMatrix& b) {
  nlohmann::json j;
  j["n"] = b.size();
  j["h"] = b.h();
  j["mode"] = to_string(b.mode());
  j["engine"] = to_string(b.engine());
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < b.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < b.size(); ++k) {
      if (b.is_exact())
        row.push_back(b.r(i, k).str());
      else
        row.push_back(b.fv(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string matrix_to_csv(const DSMatrix& b) {
  std::ostringstream out;
  for (int i = 0; i < b.size(); ++i) {
    for (int k = 0; k < b.size(); ++k) {
      if (k) out << ',';
      if (b.is_exact())
        out << b.r(i, k).str();
      else
        out << float17(b.fv(i, k));
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json check_to_json(const CheckResult& r) {
  nlohmann::json j;
  j["check"] = r.name;
  switch (r.status) {
    case CheckStatus::Pass: j["status"] = "pass"; break;
    case CheckStatus::Fail: j["status"] = "fail"; break;
    case CheckStatus::Skipped: j["status"] = "skipped"; break;
  }
  j["comparisons"] = r.comparisons;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  return j;
}

nlohmann::json bounds_to_json(const BoundsReport& rep) {
  nlohmann::json j = check_to_json(rep.result);
  j["omega"] = rep.omega;
  j["omega_at"] = {rep.omega_i, rep.omega_j};
  j["complete_equality"] = rep.complete_equality;
  j["tree_bounds_apply"] = rep.tree_bounds_apply;
  j["path_equality"] = rep.path_equality;
  j["star_equality"] = rep.star_equality;
  j["algebraic_connectivity"] = rep.algebraic_connectivity;
  return j;
}

nlohmann::json centrality_to_json(const CentralityReport& rep) {
  nlohmann::json j = check_to_json(rep.result);
  j["remoteness"] = rep.remoteness;
  j["least_remote"] = rep.least_remote;
  j["most_remote_pair"] = {rep.rho_max_i, rep.rho_max_j};
  j["rho_max"] = rep.rho_max;
  j["argmin_matches_diag"] = rep.argmin_matches_diag;
  return j;
}

std::string trajectory_to_csv(const HeatTrajectory& traj) {
  std::ostringstream out;
  out << "step,vertex,value\n";
  for (const auto& s : traj.records) {
    for (size_t v = 0; v < s.u.size(); ++v)
      out << s.step_index << ',' << v << ',' << float17(s.u[v]) << '\n';
  }
  return out.str();
}

std::string summary_to_csv(const HeatTrajectory& traj) {
  std::ostringstream out;
  out << "step,mass,max,min,dist_to_mean\n";
  for (const auto& s : traj.summaries) {
    out << s.step << ',' << float17(s.mass) << ',' << float17(s.max) << ',' << float17(s.min)
        << ',' << float17(s.dist_to_mean) << '\n';
  }
  return out.str();
}

}  // namespace dslap
