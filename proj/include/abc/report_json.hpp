#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abc/enumerator.hpp"
#include "abc/index_math.hpp"
#include "abc/sweep.hpp"
#include "abc/verifier.hpp"

namespace abc {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const ExtremalReport& r);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const GridCheckResult& r);
nlohmann::json to_json(const SweepRow& r);
nlohmann::json to_json(const EdgeAdditionResult& r);

/// {"schema": 1, "command", "inputs", "timestamp", "tool_version", "results"}.
/// `results` must hold records of a single kind.
nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs, nlohmann::json results);

}  // namespace abc
