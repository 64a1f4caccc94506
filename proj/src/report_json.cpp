#include "abc/report_json.hpp"

#include <chrono>
#include <ctime>

#include "abc/error.hpp"
#include "abc/graph6.hpp"

namespace abc {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json graph_list(const std::vector<Graph>& graphs) {
  auto out = nlohmann::json::array();
  for (const auto& g : graphs) out.push_back(write_graph6(g));
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json to_json(const ExtremalReport& r) {
  return {
      {"kind", "extremal"},
      {"n", r.n},
      {"constraint", {{"kind", std::string(to_string(r.constraint.kind))}, {"value", r.constraint.value}}},
      {"class_size", r.class_size},
      {"max_value", optional_number(r.max_value)},
      {"formula_value", optional_number(r.formula_value)},
      {"labeled_maximizers", r.labeled_maximizers},
      {"maximizer_iso_classes", graph_list(r.maximizer_iso_classes)},
      {"runner_up_gap", optional_number(r.runner_up_gap)},
      {"matches_construction", r.matches_construction},
      {"unique_and_matches", r.unique_and_matches},
      {"informational", r.informational},
  };
}

nlohmann::json to_json(const ConjectureReport& r) {
  return {
      {"kind", "conjecture"}, {"n", r.n},
      {"chi", r.chi},         {"turan_value", r.turan_value},
      {"brute_max", r.brute_max}, {"class_size", r.class_size},
      {"holds", r.holds},     {"witness", graph_list(r.witness)},
  };
}

nlohmann::json to_json(const GridCheckResult& r) {
  auto violations = nlohmann::json::array();
  for (const auto& v : r.violations()) violations.push_back({{"point", v.point}, {"margin", v.margin}});
  return {
      {"kind", "grid_check"},
      {"description", r.description()},
      {"domain", r.domain()},
      {"points_checked", r.points_checked()},
      {"violations", violations},
      {"passed", r.passed()},
  };
}

nlohmann::json to_json(const SweepRow& r) {
  return {{"kind", "sweep_row"},
          {"n", r.n},
          {"param_kind", std::string(to_string(r.kind))},
          {"param_value", r.value},
          {"abc_max", r.abc_max}};
}

nlohmann::json to_json(const EdgeAdditionResult& r) {
  return {{"kind", "edge_addition"},
          {"holds", r.holds},
          {"graphs", r.graphs},
          {"additions", r.additions},
          {"strict_increases", r.strict_increases}};
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs, nlohmann::json results) {
  if (!results.is_array()) throw DomainError("make_envelope: results must be an array");
  for (const auto& r : results) {
    if (r.value("kind", "") != results.front().value("kind", "")) {
      throw DomainError("make_envelope: results must all be of one kind");
    }
  }
  return {
      {"schema", kReportSchema},
      {"command", command},
      {"inputs", std::move(inputs)},
      {"timestamp", utc_timestamp()},
      {"tool_version", kToolVersion},
      {"results", std::move(results)},
  };
}

}  // namespace abc
