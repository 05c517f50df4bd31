#include "veech/report.hpp"

#include "veech/error.hpp"

#include <chrono>

namespace veech {

std::string version_string() { return std::string("veech ") + VEECH_VERSION; }

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["spec"] = r.spec;
  j["mode"] = r.mode;
  j["index"] = r.index;
  j["rep"] = r.rep;
  j["gen"] = r.gen;
  j["perm_T"] = r.perm_T;
  j["perm_R"] = r.perm_R;
  const auto& s = r.signature;
  j["signature"] = {{"genus", s.genus},           {"punctures", s.punctures}, {"cone_points", s.cone_points},
                    {"v_infinity", s.v_infinity}, {"v_cot", s.v_cot},         {"v_cone", s.v_cone}};
  j["verified"] = r.verified;
  j["failures"] = r.failures;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

RunReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    RunReport r;
    r.version = j.at("version").get<std::string>();
    r.spec = j.at("spec");
    r.mode = j.at("mode").get<std::string>();
    r.index = j.at("index").get<std::size_t>();
    r.rep = j.at("rep").get<std::vector<std::string>>();
    r.gen = j.at("gen").get<std::vector<std::string>>();
    r.perm_T = j.at("perm_T").get<Permutation>();
    r.perm_R = j.at("perm_R").get<Permutation>();
    const auto& s = j.at("signature");
    r.signature.genus = s.at("genus").get<int>();
    r.signature.punctures = s.at("punctures").get<int>();
    r.signature.cone_points = s.at("cone_points").get<std::vector<int>>();
    r.signature.v_infinity = s.at("v_infinity").get<int>();
    r.signature.v_cot = s.at("v_cot").get<int>();
    r.signature.v_cone = s.at("v_cone").get<int>();
    r.verified = j.at("verified").get<bool>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed report: ") + e.what());
  }
}

RunOutput run_pipeline(const nlohmann::ordered_json& spec, const RunOptions& options) {
  return run_pipeline(parse_cover_spec(spec), options);
}

RunOutput run_pipeline(const CoverSpec& spec, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = MembershipContext::make(spec, options.mode);
  auto result = enumerate(ctx, {options.cap, options.strategy});
  const auto check = verify(result, ctx);

  RunReport r;
  r.version = version_string();
  r.spec = to_json(spec);
  r.mode = to_string(ctx.mode());
  r.index = result.index();
  for (const auto& w : result.rep) r.rep.push_back(to_string(w));
  for (const auto& w : result.gen) r.gen.push_back(to_string(w));
  r.perm_T = result.perm_T;
  r.perm_R = result.perm_R;
  r.verified = check.passed();
  r.failures = check.failures;
  if (r.verified) r.signature = signature(result, ctx.params());
  if (options.timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(r), std::move(result), ctx.params()};
}

}  // namespace veech
