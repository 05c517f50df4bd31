// Command-line front end: run the Veech group pipeline on a cover spec.

#include "veech/error.hpp"
#include "veech/presets.hpp"
#include "veech/render.hpp"
#include "veech/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

ordered_json load_spec(const std::string& path, const std::string& preset_name) {
  if (!preset_name.empty()) {
    if (!path.empty()) throw veech::Error(veech::ErrorKind::invalid_argument, "give either SPEC or --preset, not both");
    return veech::to_json(veech::preset(preset_name));
  }
  if (path.empty()) throw veech::Error(veech::ErrorKind::invalid_argument, "no spec given (SPEC or --preset)");
  std::ifstream in(path);
  if (!in) throw veech::Error(veech::ErrorKind::invalid_argument, "cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw veech::Error(veech::ErrorKind::parse, path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw veech::Error(veech::ErrorKind::invalid_argument, "cannot write '" + out_path + "'");
  out << text;
}

std::string cones(const std::vector<int>& c) {
  std::string s;
  for (auto k : c) s += (s.empty() ? "" : ",") + std::to_string(k);
  return "(" + s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veech groups of covers of the regular 2n-gon surface"};
  app.set_version_flag("--version", veech::version_string());
  app.require_subcommand(1);

  std::string spec_path, preset_name, mode = "auto", out_path, render_format, scan = "indexed";
  std::uint64_t cap = 0;
  bool timing = false;

  auto* run = app.add_subcommand("run", "Compute the Veech group and orbifold signature of a cover");
  run->add_option("SPEC", spec_path, "JSON cover spec");
  run->add_option("--preset", preset_name, "Use a built-in spec instead of SPEC");
  run->add_option("--mode", mode, "Membership mode")->check(CLI::IsMember({"auto", "abelian", "permutation", "cross"}));
  run->add_option("--cap", cap, "Maximum number of cosets (default: |SL(n,Z_d)|, or 100000 for non-abelian covers)");
  run->add_option("--out", out_path, "Write output here instead of stdout");
  run->add_option("--render", render_format, "Emit svg, dot or csv instead of the JSON report")
      ->check(CLI::IsMember({"svg", "dot", "csv"}));
  run->add_option("--scan", scan, "Coset lookup strategy")->check(CLI::IsMember({"indexed", "linear"}));
  run->add_flag("--timing", timing, "Include wall-clock time in the report");

  std::string name;
  auto* preset_cmd = app.add_subcommand("preset", "Print a built-in cover spec");
  preset_cmd->add_option("NAME", name, "Preset name, e.g. fig6, fig14:3, trivial:5")->required();
  preset_cmd->add_option("--out", out_path, "Write the cover JSON here");

  std::string write_dir;
  auto* presets_cmd = app.add_subcommand("presets", "List the preset catalog");
  presets_cmd->add_option("--write", write_dir, "Write every preset as DIR/<name>.json");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report the structure of a cover");
  analyze_cmd->add_option("SPEC", spec_path, "JSON cover spec");
  analyze_cmd->add_option("--preset", preset_name, "Use a built-in spec instead of SPEC");

  std::string family;
  int from = 0, to = 0;
  auto* sweep = app.add_subcommand("sweep", "Tabulate index and signature over a preset family");
  sweep->add_option("FAMILY", family, "fig12, fig13, fig14, fig15 or trivial")->required();
  sweep->add_option("FROM", from)->required();
  sweep->add_option("TO", to)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      veech::RunOptions options;
      options.mode = veech::parse_mode_request(mode);
      options.cap = cap;
      options.strategy = scan == "linear" ? veech::ScanStrategy::linear : veech::ScanStrategy::indexed;
      options.timing = timing;
      const auto output = veech::run_pipeline(load_spec(spec_path, preset_name), options);
      if (render_format.empty())
        emit(veech::to_json(output.report).dump(2) + "\n", out_path);
      else
        emit(veech::render(output.result, output.params, veech::parse_render_format(render_format)), out_path);
      for (const auto& f : output.report.failures) std::cerr << "verify: " << f << '\n';
      return output.report.verified ? 0 : 1;
    }
    if (*preset_cmd) {
      emit(veech::to_json(veech::preset(name)).dump() + "\n", out_path);
      return 0;
    }
    if (*presets_cmd) {
      for (const auto& n : veech::preset_names()) {
        if (write_dir.empty()) {
          std::cout << n << '\n';
          continue;
        }
        const auto path = std::filesystem::path(write_dir) / (veech::preset_file_stem(n) + ".json");
        emit(veech::to_json(veech::preset(n)).dump() + "\n", path.string());
      }
      return 0;
    }
    if (*analyze_cmd) {
      const auto spec = veech::parse_cover_spec(load_spec(spec_path, preset_name));
      const auto ctx = veech::MembershipContext::make(spec);
      const auto& s = ctx.structure();
      ordered_json j;
      j["galois"] = s.is_galois;
      j["abelian"] = s.deck_abelian;
      if (s.exponent) j["d"] = *s.exponent;
      if (s.V) {
        ordered_json rows = ordered_json::array();
        for (Eigen::Index r = 0; r < s.V->rows().rows(); ++r) {
          ordered_json row = ordered_json::array();
          for (Eigen::Index c = 0; c < s.V->rows().cols(); ++c) row.push_back(s.V->rows()(r, c));
          rows.push_back(std::move(row));
        }
        j["V"] = std::move(rows);
        j["V_order"] = s.V->cardinality();
      }
      j["generator_orders"] = s.generator_orders;
      j["order_condition"] = s.order_condition;
      j["mode"] = veech::to_string(ctx.mode());
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*sweep) {
      std::cout << "name\tindex\tgen\tgenus\tpunctures\tcones\n";
      bool ok = true;
      for (int k = from; k <= to; ++k) {
        const auto preset_id = family + ":" + std::to_string(k);
        const auto output = veech::run_pipeline(veech::preset(preset_id));
        const auto& r = output.report;
        ok = ok && r.verified;
        std::cout << preset_id << '\t' << r.index << '\t' << r.gen.size() << '\t' << r.signature.genus << '\t'
                  << r.signature.punctures << '\t' << cones(r.signature.cone_points) << '\n';
      }
      return ok ? 0 : 1;
    }
  } catch (const veech::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
