#include "fano/acceptance.hpp"
#include "fano/classify.hpp"
#include "fano/error.hpp"
#include "fano/io.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef FANO_VERSION
#define FANO_VERSION "0.0.0"
#endif

using namespace fano;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInput = 2, kConfig = 3, kMismatch = 4 };

int fail(ErrorKind kind, const std::string& message) {
  Json j;
  j["error"] = {{"kind", std::string(to_string(kind))}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  return kind == ErrorKind::ConfigError ? kConfig : kInput;
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ClassifyArgs {
  std::string basket;
  std::optional<long long> n_max, t_height_max, max_inputs;
  unsigned mult_max = 2;
  long long region_expand = 0;
  unsigned boundary_factor = 3, max_depth = 8;
  std::string out_dir = "fano_run";
  std::string resume;
  bool serial = false;
};

int cmd_classify(const ClassifyArgs& a) {
  std::string started = utc_now();
  auto spec = BasketSpec::parse(a.basket);
  SearchBounds bounds;
  if (a.n_max) bounds.n_max = Integer(*a.n_max);
  bounds.mult_max = a.mult_max;
  bounds.region_expand = a.region_expand;
  if (a.t_height_max) {
    if (*a.t_height_max < 1) throw Error(ErrorKind::ConfigError, "t-height-max must be positive");
    bounds.t_height_max = *a.t_height_max;
  }
  EquivalenceBudget budget{a.boundary_factor, a.max_depth};

  ClassifyOptions options;
  options.parallel = !a.serial;
  if (a.max_inputs) {
    if (*a.max_inputs < 0) throw Error(ErrorKind::ConfigError, "max-inputs must be non-negative");
    options.max_inputs = static_cast<std::size_t>(*a.max_inputs);
  }
  std::optional<ClassificationRun> previous;
  if (!a.resume.empty()) {
    Json j;
    try {
      j = Json::parse(read_text_file(a.resume));
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("invalid run file: ") + e.what());
    }
    previous = run_from_json(j);
    options.resume = &*previous;
  }

  auto run = classify(spec, bounds, budget, options);

  std::error_code ec;
  fs::create_directories(fs::path(a.out_dir) / "svg", ec);
  if (ec) throw Error(ErrorKind::ConfigError, "cannot create " + a.out_dir + ": " + ec.message());
  const fs::path out(a.out_dir);
  write_text_file((out / "results.json").string(), run_json(run).dump(2) + "\n");
  write_text_file((out / "table.csv").string(), table_csv(run, spec));
  write_text_file((out / "table.json").string(), table_json(run, spec).dump(2) + "\n");
  Json svgs = Json::array();
  for (const auto& row : run.rows) {
    std::ostringstream name;
    name << "row_" << std::setw(2) << std::setfill('0') << row.index << ".svg";
    write_text_file((out / "svg" / name.str()).string(), render_svg(row.representative));
    svgs.push_back("svg/" + name.str());
  }

  Json manifest;
  manifest["command"] = "classify";
  manifest["tool_version"] = FANO_VERSION;
  manifest["basket"] = run.basket_spec;
  manifest["config_hash"] = run.config_hash;
  manifest["bounds"] = run_json(run)["bounds"];
  manifest["outputs"] = {{"complete", run.complete},
                         {"inputs", run.inputs.size()},
                         {"minimal_polygons", run.outputs.size()},
                         {"classes", run.rows.size()},
                         {"files", {"results.json", "table.csv", "table.json"}},
                         {"svg", svgs}};
  manifest["timestamps"] = {{"started", started}, {"finished", utc_now()}};
  write_text_file((out / "manifest.json").string(), manifest.dump(2) + "\n");

  print({{"basket", run.basket_spec},
         {"config_hash", run.config_hash},
         {"complete", run.complete},
         {"inputs", run.inputs.size()},
         {"classes", run.rows.size()},
         {"out_dir", a.out_dir}});
  return kOk;
}

int cmd_verify(const AcceptanceOptions& o, const std::vector<int>& only) {
  std::vector<int> ids = only;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8};
  bool all = true;
  for (int id : ids) {
    auto r = run_criterion(id, o);
    all = all && r.pass;
    std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
  }
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano polygon mutation, singularity content and classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FANO_VERSION);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: FANO_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string poly_file, out_file;
  std::size_t order = 8;
  auto* analyze = app.add_subcommand("analyze", "invariants of a polygon (JSON)");
  analyze->add_option("polygon", poly_file, "polygon JSON file")->required();
  analyze->add_option("--series-order", order, "Hilbert series terms");

  std::size_t edge_index = 0;
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate at an edge (clockwise index from the first vertex)");
  mutate_cmd->add_option("polygon", poly_file)->required();
  mutate_cmd->add_option("--edge-index", edge_index)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "mutate down to a minimal polygon");
  minimize_cmd->add_option("polygon", poly_file)->required();

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "classify minimal polygons with a given basket");
  classify_cmd->add_option("--basket", ca.basket, "e.g. \"1x1/6(1,1)\" or \"family:1/3+1/6\"")->required();
  classify_cmd->add_option("--n-max", ca.n_max);
  classify_cmd->add_option("--mult-max", ca.mult_max);
  classify_cmd->add_option("--t-height-max", ca.t_height_max, "height cap for residue-free edges");
  classify_cmd->add_option("--region-expand", ca.region_expand);
  classify_cmd->add_option("--boundary-factor", ca.boundary_factor);
  classify_cmd->add_option("--max-depth", ca.max_depth);
  classify_cmd->add_option("--max-inputs", ca.max_inputs, "stop after this many facet inputs");
  classify_cmd->add_option("--out-dir", ca.out_dir);
  classify_cmd->add_option("--resume", ca.resume, "results.json of an interrupted run");
  classify_cmd->add_flag("--serial", ca.serial, "serial reference path");

  std::size_t n_max = 5;
  std::string fixture;
  auto* period_cmd = app.add_subcommand("period", "constant terms of powers of a Laurent polynomial");
  period_cmd->add_option("laurent", poly_file, "file holding the polynomial");
  period_cmd->add_option("--n-max", n_max);
  period_cmd->add_option("--fixture", fixture, "shipped fixture id instead of a file");

  auto* render_cmd = app.add_subcommand("render", "SVG of a polygon");
  render_cmd->add_option("polygon", poly_file)->required();
  render_cmd->add_option("-o,--output", out_file, "default: stdout");

  AcceptanceOptions acc;
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--cases", acc.property_cases, "randomized cases per property");
  verify_cmd->add_option("--seed", acc.seed);
  verify_cmd->add_option("--criterion", only)->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorKind::ParseError, e.what());
  }

  if (threads == 0) {
    if (const char* env = std::getenv("FANO_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*analyze) {
      print(analyze_json(read_polygon_file(poly_file), order));
    } else if (*mutate_cmd) {
      Polygon p = read_polygon_file(poly_file);
      auto es = edges(p);
      if (edge_index >= es.size())
        throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(edge_index) + " of " + std::to_string(es.size()));
      print(trace_json(mutate(p, mutation_spec(es[edge_index]))));
    } else if (*minimize_cmd) {
      Polygon p = read_polygon_file(poly_file);
      print(minimize_json(p, minimize(p)));
    } else if (*classify_cmd) {
      return cmd_classify(ca);
    } else if (*period_cmd) {
      if (!fixture.empty()) {
        const PeriodFixture* fx = nullptr;
        for (const auto& f : period_fixtures())
          if (f.id == fixture) fx = &f;
        if (!fx) throw Error(ErrorKind::ParseError, "no fixture " + fixture);
        print(period_json(fx->prefix(n_max)));
      } else {
        if (poly_file.empty()) throw Error(ErrorKind::ParseError, "period needs a file or --fixture");
        print(period_json(period_prefix(parse_laurent(read_text_file(poly_file)), n_max)));
      }
    } else if (*render_cmd) {
      std::string svg = render_svg(read_polygon_file(poly_file));
      if (out_file.empty()) {
        std::cout << svg;
      } else {
        write_text_file(out_file, svg);
      }
    } else if (*verify_cmd) {
      return cmd_verify(acc, only);
    }
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  }
  return kOk;
}
