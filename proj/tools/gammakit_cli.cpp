// Copyright 2026 The gammakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Links only the C API in gammakit/gammakit.h.

#include <unistd.h>

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammakit/gammakit.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitMath = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 4;

constexpr std::uint64_t kDefaultSeed = 20260101;

/// Thrown to leave a subcommand with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string input;
  std::string output;
  std::optional<double> tol;
  std::optional<int> grid_radii;
  std::optional<int> grid_angles;
  std::uint64_t seed = kDefaultSeed;
  int budget = 1000;
  std::string format;

  // generate
  int n = 2;
  int dim = 4;
  std::string model = "mixed_direct_sum";
  std::string truth;

  // region-slice
  int vary = 1;
  int resolution = 81;
  double extent = 0.0;
  std::vector<double> fixed;
};

int exit_for(gk_status status) {
  switch (status) {
    case GK_OK:
      return kExitPass;
    case GK_THEOREM_VIOLATION:
      return kExitMath;
    case GK_NUMERICAL_FAILURE:
    case GK_DEGENERATE_COMBINATION:
    case GK_INTERNAL:
      return kExitNumerical;
    case GK_INVALID_ARGUMENT:
    case GK_INVALID_DIMENSION:
    case GK_PARSE_ERROR:
      return kExitUsage;
  }
  return kExitNumerical;
}

void check(gk_status status, const char* what) {
  if (status != GK_OK) {
    throw Exit{exit_for(status),
               std::string(what) + ": " + gk_status_name(status) + ": " + gk_last_error()};
  }
}

std::string take(char* text) {
  std::string out = text != nullptr ? text : "";
  gk_string_free(text);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GridPtr = std::unique_ptr<gk_grid, Deleter<gk_grid, gk_grid_free>>;
using PointPtr = std::unique_ptr<gk_point, Deleter<gk_point, gk_point_free>>;
using TuplePtr = std::unique_ptr<gk_tuple, Deleter<gk_tuple, gk_tuple_free>>;
using DecompositionPtr =
    std::unique_ptr<gk_decomposition, Deleter<gk_decomposition, gk_decomposition_free>>;

std::string read_input(const Config& config) {
  if (config.input.empty()) throw Exit{kExitUsage, "--input is required"};
  std::ifstream in(config.input, std::ios::binary);
  if (!in) throw Exit{kExitUsage, "cannot read input file " + config.input};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// Writes to a temporary file beside the target and renames it into place.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Exit{kExitUsage, "cannot write " + temp.string()};
    out << text;
    out.flush();
    if (!out) throw Exit{kExitUsage, "failed writing " + temp.string()};
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Exit{kExitUsage, "cannot rename into " + path};
  }
}

void emit(const Config& config, const std::string& text) {
  const std::string body = (!text.empty() && text.back() != '\n') ? text + "\n" : text;
  if (config.output.empty()) {
    std::cout << body;
  } else {
    write_atomic(config.output, body);
  }
}

std::string render_value(const Json& v) {
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void collect_rows(const std::string& prefix, const Json& value,
                  std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      collect_rows(prefix.empty() ? key : prefix + "." + key, child, rows);
    }
  } else if (value.is_primitive()) {
    rows.emplace_back(prefix, render_value(value));
  } else if (value.size() <= 8 &&
             std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_primitive(); })) {
    rows.emplace_back(prefix, value.dump());
  }
}

/// Two-column table of the scalar leaves of a JSON report.
std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  collect_rows("", report, rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  return out.str();
}

void emit_report(const Config& config, const Json& report) {
  if (config.format == "table") {
    emit(config, render_table(report));
  } else if (config.format == "json") {
    emit(config, report.dump(2));
  } else {
    throw Exit{kExitUsage, "format '" + config.format + "' is not available for this subcommand"};
  }
}

GridPtr make_grid(const Config& config, int default_rings, int default_angles,
                  bool standard_when_unset) {
  gk_grid* grid = nullptr;
  if (standard_when_unset && !config.grid_radii && !config.grid_angles) {
    check(gk_grid_standard(&grid), "grid");
  } else {
    check(gk_grid_uniform(config.grid_radii.value_or(default_rings),
                          config.grid_angles.value_or(default_angles), &grid),
          "grid");
  }
  return GridPtr(grid);
}

void log_config(const std::string& subcommand, const Config& config, const Json& extra) {
  Json log = {{"subcommand", subcommand},
              {"input", config.input},
              {"output", config.output.empty() ? "-" : config.output},
              {"seed", config.seed},
              {"format", config.format},
              {"threads", gk_get_threads()},
              {"version", gk_version()}};
  for (const auto& [key, value] : extra.items()) log[key] = value;
  std::cerr << "gammakit config " << log.dump() << '\n';
}

Json grid_log(const Config& config, int rings, int angles, bool standard_when_unset) {
  if (standard_when_unset && !config.grid_radii && !config.grid_angles) {
    return {{"grid", "standard(8 rings x 256 angles, 1024 boundary)"}};
  }
  const int r = config.grid_radii.value_or(rings);
  const int a = config.grid_angles.value_or(angles);
  return {{"grid", std::to_string(r) + " rings x " + std::to_string(a) + " angles, " +
                       std::to_string(4 * a) + " boundary"}};
}

// ---- subcommands ----

int run_check_point(Config config) {
  if (config.format.empty()) config.format = "json";
  const double tol = config.tol.value_or(1e-9);
  log_config("check-point", config, {{"tol", tol}});
  const std::string text = read_input(config);
  gk_point* raw = nullptr;
  check(gk_point_from_json(text.c_str(), &raw), "input");
  const PointPtr point(raw);
  const Json report = Json::parse(take([&] {
    char* out = nullptr;
    check(gk_point_check_report(point.get(), tol, &out), "check-point");
    return out;
  }()));
  emit_report(config, report);
  const bool inside = report["membership"]["closed"]["inside"].get<bool>();
  std::cerr << "closed membership: " << (inside ? "inside" : "outside") << '\n';
  return inside ? kExitPass : kExitMath;
}

gk_certify_options certify_options(const Config& config, const gk_grid* grid) {
  gk_certify_options options;
  gk_certify_options_default(&options);
  options.grid = grid;
  if (config.tol) options.tol = *config.tol;
  options.seed = config.seed;
  return options;
}

int run_certify(Config config) {
  if (config.format.empty()) config.format = "json";
  const GridPtr grid = make_grid(config, 8, 256, true);
  const gk_certify_options options = certify_options(config, grid.get());
  Json extra = grid_log(config, 8, 256, true);
  extra["tol"] = options.tol;
  extra["pencil_tol"] = options.pencil_tol;
  extra["vn_trials"] = options.vn_trials;
  log_config("certify", config, extra);

  const std::string text = read_input(config);
  gk_tuple* raw = nullptr;
  check(gk_tuple_from_json(text.c_str(), 0, &raw), "input");
  const TuplePtr tuple(raw);
  gk_verdict verdict = GK_VERDICT_FAILED;
  char* json = nullptr;
  check(gk_certify(tuple.get(), &options, &verdict, &json), "certify");
  const Json report = Json::parse(take(json));
  emit_report(config, report);
  std::cerr << "verdict: " << report["verdict"].get<std::string>() << '\n';
  return verdict == GK_VERDICT_FAILED ? kExitMath : kExitPass;
}

int run_decompose(Config config) {
  if (config.format.empty()) config.format = "json";
  const double tol = config.tol.value_or(1e-9);
  const GridPtr grid = make_grid(config, 4, 64, false);
  Json extra = grid_log(config, 4, 64, false);
  extra["tol"] = tol;
  extra["verify_tol"] = 1e-8;
  log_config("decompose", config, extra);

  const std::string text = read_input(config);
  gk_tuple* raw = nullptr;
  check(gk_tuple_from_json(text.c_str(), 0, &raw), "input");
  const TuplePtr tuple(raw);

  // The decomposition is only meaningful for tuples that survive the
  // certifier; a failure here is a mathematical outcome, not a crash.
  gk_certify_options options = certify_options(config, grid.get());
  options.tol = 1e-9;
  options.vn_trials = 4;
  gk_verdict verdict = GK_VERDICT_FAILED;
  char* cert_json = nullptr;
  check(gk_certify(tuple.get(), &options, &verdict, &cert_json), "certify");
  const Json certificate = Json::parse(take(cert_json));
  if (verdict == GK_VERDICT_FAILED) {
    std::cerr << "input is not a Gamma_n-contraction (failed check: "
              << certificate["failed_check"].dump() << ")\n";
    emit_report(config, certificate);
    return kExitMath;
  }
  if (verdict == GK_VERDICT_NECESSARY_PASSED) {
    std::cerr << "warning: only necessary conditions were verified for this tuple\n";
  }

  gk_decomposition* dec_raw = nullptr;
  const gk_status status = gk_decompose(tuple.get(), tol, &dec_raw);
  if (status == GK_THEOREM_VIOLATION) {
    std::cerr << "theorem violation: " << gk_last_error() << '\n';
    return kExitMath;
  }
  check(status, "decompose");
  const DecompositionPtr dec(dec_raw);

  Json report = Json::parse(take([&] {
    char* out = nullptr;
    check(gk_decomposition_to_json(dec.get(), &out), "decompose");
    return out;
  }()));
  int passed = 0;
  char* verify_json = nullptr;
  check(gk_decomposition_verify(dec.get(), tuple.get(), 1e-8, &passed, &verify_json), "verify");
  report["verification"] = Json::parse(take(verify_json));
  report["certificate_verdict"] = certificate["verdict"];

  if (config.format == "table") {
    std::ostringstream out;
    out << "k (dim H1)         " << report["k"] << '\n'
        << "dim                " << report["dim"] << '\n'
        << "certificate        " << certificate["verdict"].get<std::string>() << '\n'
        << "verification       " << (passed ? "passed" : "FAILED") << '\n'
        << "check                          value          threshold\n";
    for (const Json& c : report["verification"]["checks"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-30s %-14.4g %-10.4g %s\n",
                    c["name"].get<std::string>().c_str(), c["value"].get<double>(),
                    c["threshold"].get<double>(), c["passed"].get<bool>() ? "ok" : "FAIL");
      out << line;
    }
    emit(config, out.str());
  } else {
    emit_report(config, report);
  }
  std::cerr << "k = " << gk_decomposition_k(dec.get()) << ", verification "
            << (passed ? "passed" : "failed") << '\n';
  return passed ? kExitPass : kExitMath;
}

int run_pencil_scan(Config config) {
  if (config.format.empty()) config.format = "csv";
  const double tol = config.tol.value_or(1e-8);
  const GridPtr grid = make_grid(config, 8, 256, true);
  Json extra = grid_log(config, 8, 256, true);
  extra["tol"] = tol;
  log_config("pencil-scan", config, extra);

  const std::string text = read_input(config);
  Json probe;
  try {
    probe = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Exit{kExitUsage, std::string("input: malformed JSON: ") + e.what()};
  }
  double minimum = 0.0;
  char* summary = nullptr;
  char* csv = nullptr;
  if (probe.is_object() && probe.contains("S")) {
    gk_tuple* raw = nullptr;
    check(gk_tuple_from_json(text.c_str(), 1, &raw), "input");
    const TuplePtr tuple(raw);
    check(gk_tuple_pencil_scan(tuple.get(), grid.get(), &minimum, &summary, &csv), "pencil-scan");
  } else {
    gk_point* raw = nullptr;
    check(gk_point_from_json(text.c_str(), &raw), "input");
    const PointPtr point(raw);
    check(gk_point_pencil_scan(point.get(), grid.get(), &minimum, &summary, &csv), "pencil-scan");
  }
  const std::string csv_text = take(csv);
  const Json summary_json = Json::parse(take(summary));
  if (config.format == "csv") {
    emit(config, csv_text);
  } else {
    emit_report(config, summary_json);
  }
  std::cerr << "pencil minimum: " << summary_json["minimum"].dump() << '\n';
  return minimum >= -tol ? kExitPass : kExitMath;
}

int run_region_slice(Config config) {
  if (config.format.empty()) config.format = "csv";
  if (config.format != "csv") throw Exit{kExitUsage, "region-slice emits csv only"};
  const double tol = config.tol.value_or(1e-9);
  const GridPtr grid = make_grid(config, 4, 64, false);
  Json extra = grid_log(config, 4, 64, false);
  extra["tol"] = tol;
  extra["n"] = config.n;
  extra["vary"] = config.vary;
  extra["resolution"] = config.resolution;
  extra["extent"] = config.extent;

  PointPtr base;
  if (config.input.empty() && config.n != 2 && config.n != 3) {
    log_config("region-slice", config, extra);
    throw Exit{kExitUsage, "region-slice supports n = 2 or 3"};
  }
  if (!config.input.empty()) {
    const std::string text = read_input(config);
    gk_point* raw = nullptr;
    check(gk_point_from_json(text.c_str(), &raw), "input");
    base.reset(raw);
  } else {
    // --fixed lists re,im pairs for coordinates 1..n; missing ones are 0.
    if (config.fixed.size() % 2 != 0 || config.fixed.size() > 2u * config.n) {
      throw Exit{kExitUsage, "--fixed takes up to n re,im pairs"};
    }
    std::vector<gk_complex> coords(static_cast<std::size_t>(config.n), gk_complex{0.0, 0.0});
    for (std::size_t k = 0; 2 * k < config.fixed.size(); ++k) {
      coords[k] = {config.fixed[2 * k], config.fixed[2 * k + 1]};
    }
    gk_point* raw = nullptr;
    check(gk_point_create(config.n, coords.data(), coords.back(), &raw), "base point");
    base.reset(raw);
  }
  extra["base"] = Json::parse(take([&] {
    char* out = nullptr;
    check(gk_point_to_json(base.get(), &out), "base point");
    return out;
  }()));
  log_config("region-slice", config, extra);

  char* csv = nullptr;
  check(gk_region_slice(base.get(), config.vary, config.extent, config.resolution, grid.get(), tol,
                        &csv),
        "region-slice");
  emit(config, take(csv));
  return kExitPass;
}

int run_generate(Config config) {
  if (config.format.empty()) config.format = "json";
  if (config.format != "json") throw Exit{kExitUsage, "generate emits json only"};
  std::string truth_path = config.truth;
  if (truth_path.empty() && !config.output.empty()) truth_path = config.output + ".truth.json";
  log_config("generate", config,
             {{"n", config.n}, {"dim", config.dim}, {"model", config.model},
              {"truth", truth_path.empty() ? "-" : truth_path}});

  gk_tuple* raw = nullptr;
  char* truth = nullptr;
  check(gk_generate(config.seed, config.n, config.dim, config.model.c_str(), &raw, &truth),
        "generate");
  const TuplePtr tuple(raw);
  const std::string truth_text = Json::parse(take(truth)).dump(2) + "\n";
  const std::string tuple_text = Json::parse(take([&] {
                                   char* out = nullptr;
                                   check(gk_tuple_to_json(tuple.get(), &out), "generate");
                                   return out;
                                 }())).dump(2);
  emit(config, tuple_text);
  if (!truth_path.empty()) {
    write_atomic(truth_path, truth_text);
  } else {
    std::cerr << truth_text;
  }
  return kExitPass;
}

int run_explore(Config config) {
  if (config.format.empty()) config.format = "json";
  const double tol = config.tol.value_or(1e-9);
  const GridPtr grid = make_grid(config, 8, 256, true);
  Json extra = grid_log(config, 8, 256, true);
  extra["tol"] = tol;
  extra["n"] = config.n;
  extra["budget"] = config.budget;
  extra["refinement"] = "2x radii and angles";
  log_config("explore", config, extra);
  if (config.budget < 1) throw Exit{kExitUsage, "--budget must be >= 1"};

  char* json = nullptr;
  check(gk_explore(config.n, config.budget, config.seed, grid.get(), tol, &json), "explore");
  const Json report = Json::parse(take(json));
  emit_report(config, report);
  std::cerr << "candidates: " << report["candidates"].size() << '\n';
  return kExitPass;
}

int apply_thread_env() {
  const char* env = std::getenv("GAMMAKIT_THREADS");
  if (env == nullptr || *env == '\0') return kExitPass;
  char* end = nullptr;
  errno = 0;
  const long threads = std::strtol(env, &end, 10);
  if (errno != 0 || *end != '\0' || threads < 1 || threads > 4096) {
    std::cerr << "error: GAMMAKIT_THREADS must be a positive integer\n";
    return kExitUsage;
  }
  gk_set_threads(static_cast<int>(threads));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  if (const int code = apply_thread_env(); code != kExitPass) return code;

  CLI::App app{"gammakit: symmetrized polydisc geometry and Gamma_n-contraction tools"};
  app.require_subcommand(1);
  Config config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "input JSON file");
    sub->add_option("--output", config.output, "output file (written atomically); stdout if unset");
    sub->add_option("--tol", config.tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--grid-radii", config.grid_radii, "number of alpha rings")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid-angles", config.grid_angles, "angles per alpha ring")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  CLI::App* check_point = app.add_subcommand("check-point", "membership report for a point");
  CLI::App* decompose = app.add_subcommand("decompose", "canonical decomposition of a tuple");
  CLI::App* certify = app.add_subcommand("certify", "layered Gamma_n-contraction certificate");
  CLI::App* pencil = app.add_subcommand("pencil-scan", "pencil values over the alpha grid");
  CLI::App* slice = app.add_subcommand("region-slice", "membership and pencil grid over one coordinate");
  CLI::App* generate = app.add_subcommand("generate", "seeded instance with ground truth");
  CLI::App* explore = app.add_subcommand("explore", "search for pencil-positive outside points");
  for (CLI::App* sub : {check_point, decompose, certify, pencil, slice, generate, explore}) {
    add_common(sub);
  }
  generate->add_option("--n", config.n, "number of coordinates");
  generate->add_option("--dim", config.dim, "matrix dimension");
  generate->add_option("--model", config.model, "generator model");
  generate->add_option("--truth", config.truth, "ground-truth sidecar path");
  slice->add_option("--n", config.n, "2 or 3 (when no --input)");
  slice->add_option("--vary", config.vary, "coordinate index swept over the plane");
  slice->add_option("--resolution", config.resolution, "samples per axis");
  slice->add_option("--extent", config.extent, "half-width of the square (0: n + 0.5)");
  slice->add_option("--fixed", config.fixed, "re im pairs for coordinates 1..n")->delimiter(',');
  explore->add_option("--n", config.n, "number of coordinates");
  explore->add_option("--budget", config.budget, "number of sampled outside points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_point) return run_check_point(config);
    if (*decompose) return run_decompose(config);
    if (*certify) return run_certify(config);
    if (*pencil) return run_pencil_scan(config);
    if (*slice) return run_region_slice(config);
    if (*generate) return run_generate(config);
    if (*explore) return run_explore(config);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
