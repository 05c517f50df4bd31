#pragma once

#include "veech/enumerate.hpp"
#include "veech/orbifold.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace veech {

/// Build identifier written into every report.
std::string version_string();

struct RunOptions {
  ModeRequest mode = ModeRequest::automatic;
  /// 0 selects default_cap.
  std::uint64_t cap = 0;
  ScanStrategy strategy = ScanStrategy::indexed;
  /// Adds wall-clock milliseconds to the report, which makes it
  /// non-reproducible byte for byte.
  bool timing = false;
};

struct RunReport {
  std::string version;
  nlohmann::ordered_json spec;
  std::string mode;
  std::size_t index = 0;
  std::vector<std::string> rep;
  std::vector<std::string> gen;
  Permutation perm_T;
  Permutation perm_R;
  OrbifoldSignature signature;
  bool verified = false;
  std::vector<std::string> failures;
  std::optional<double> timing_ms;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::ordered_json to_json(const RunReport& report);
/// Throws Error(parse) on malformed input.
RunReport report_from_json(const nlohmann::ordered_json& j);

struct RunOutput {
  RunReport report;
  EnumerationResult result;
  PolygonParams params;
};

/// parse -> analyze -> membership context -> enumerate -> verify -> signature.
RunOutput run_pipeline(const nlohmann::ordered_json& spec, const RunOptions& options = {});
RunOutput run_pipeline(const CoverSpec& spec, const RunOptions& options = {});

}  // namespace veech
