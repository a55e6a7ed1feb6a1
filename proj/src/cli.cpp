#include "cdid/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdid/io/cfd.hpp"
#include "cdid/io/csv.hpp"
#include "cdid/io/manifest.hpp"
#include "cdid/io/pgm.hpp"
#include "cdid/pipelines.hpp"
#include "cdid/sim/metrics.hpp"
#include "cdid/sim/montecarlo.hpp"
#include "cdid/sim/noise.hpp"
#include "cdid/sim/scenes.hpp"

namespace cdid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string quote_message(const std::string& msg) {
  std::string out;
  for (char c : msg) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

FilterConfig load_config(const std::string& path) {
  FilterConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw Error("missing_file", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad_config", e.what());
  }
  j.get_to(cfg);
  return cfg;
}

// Truth files reuse the field container: real part = phase (absolute for
// absolute scenes), imaginary part = amplitude.
ComplexField encode_truth(const TestScene& s) {
  ComplexField f(s.phase.height(), s.phase.width());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {s.phase[i], s.amplitude[i]};
  return f;
}

TestScene decode_truth(const ComplexField& f, PhaseKind kind, const std::string& name) {
  TestScene s;
  s.phase = RealField(f.height(), f.width());
  s.amplitude = RealField(f.height(), f.width());
  for (std::size_t i = 0; i < f.size(); ++i) {
    s.phase[i] = f[i].real();
    s.amplitude[i] = f[i].imag();
  }
  s.kind = kind;
  s.name = name;
  return s;
}

struct SceneRequest {
  std::string spec;
  PhaseKind kind = PhaseKind::Interferometric;
  std::size_t size = 256;
  double span = 0.0;  // 0 = default for built-ins
};

TestScene make_scene(const SceneRequest& r, RunManifest& manifest) {
  constexpr std::string_view kFilePrefix = "file:";
  RealField source;
  std::string name = r.spec;
  double span = r.span;
  if (r.spec.starts_with(kFilePrefix)) {
    const std::string path = r.spec.substr(kFilePrefix.size());
    source = load_gray_image(path, true);
    manifest.input_hashes[path] = hash_file(path);
    name = std::filesystem::path(path).stem().string();
    if (r.kind == PhaseKind::Absolute && span <= 0.0) {
      throw Error("usage", "absolute scenes from files need --span");
    }
  } else {
    source = builtin_source(r.spec, r.size);
    if (r.kind == PhaseKind::Absolute && span <= 0.0) span = default_absolute_span(r.spec);
  }
  return build_scene(name, source, r.kind, span);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string manifest_path_for(const std::string& csv) { return csv + ".manifest.json"; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collaborative denoising of complex-valued fields", "cdid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // denoise
  struct {
    std::string in, out, algo = "imre-it", config;
    double sigma = 0.0;
    int threads = 0;
  } dn;
  auto* denoise = app.add_subcommand("denoise", "Filter a noisy complex field");
  denoise->add_option("--in", dn.in, "Noisy field (.cfd)")->required();
  denoise->add_option("--out", dn.out, "Output field (.cfd)")->required();
  denoise->add_option("--algo", dn.algo, "cd|imre|pham - ht|wi|it")->capture_default_str();
  denoise->add_option("--sigma", dn.sigma, "Complex noise standard deviation")->required();
  denoise->add_option("--config", dn.config, "Filter configuration (JSON)");
  denoise->add_option("--threads", dn.threads, "Worker threads (0 = OpenMP default)");

  // simulate
  struct {
    SceneRequest scene;
    std::string kind = "interf", out, truth;
    double sigma_phi = 0.1;
    std::uint64_t seed = 0;
    std::size_t run = 0;
  } sm;
  auto* simulate = app.add_subcommand("simulate", "Generate a noisy observation of a test scene");
  simulate->add_option("--scene", sm.scene.spec, "gauss | hills | file:<image.pgm>")->required();
  simulate->add_option("--kind", sm.kind, "interf | abs")->capture_default_str();
  simulate->add_option("--sigma-phi", sm.sigma_phi, "Phase noise level")->required();
  simulate->add_option("--seed", sm.seed, "Noise seed")->capture_default_str();
  simulate->add_option("--run", sm.run, "Monte-Carlo run index")->capture_default_str();
  simulate->add_option("--size", sm.scene.size, "Side of built-in scenes")->capture_default_str();
  simulate->add_option("--span", sm.scene.span, "Absolute phase range (0 = scene default)");
  simulate->add_option("--out", sm.out, "Noisy field (.cfd)")->required();
  simulate->add_option("--truth", sm.truth, "Ground truth (.cfd, re = phase, im = amplitude)")
      ->required();

  // evaluate
  struct {
    std::string est, truth, kind = "interf", csv, image = "scene", algo = "estimate";
    double sigma_phi = 0.0;
    std::size_t run = 0;
  } ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score an estimate against ground truth");
  evaluate->add_option("--est", ev.est, "Estimate (.cfd)")->required();
  evaluate->add_option("--truth", ev.truth, "Ground truth from simulate (.cfd)")->required();
  evaluate->add_option("--kind", ev.kind, "interf | abs")->capture_default_str();
  evaluate->add_option("--csv", ev.csv, "Output CSV")->required();
  evaluate->add_option("--image", ev.image, "Image label")->capture_default_str();
  evaluate->add_option("--algo", ev.algo, "Algorithm label")->capture_default_str();
  evaluate->add_option("--sigma-phi", ev.sigma_phi, "Noise level label");
  evaluate->add_option("--run", ev.run, "Run label");

  // benchmark
  struct {
    std::string scenes = "gauss,hills", kind = "interf", algos = "imre-ht,imre-wi,imre-it";
    std::vector<double> sigmas = default_sigma_levels();
    std::size_t runs = 10, size = 256;
    std::uint64_t seed = 0;
    std::string csv, boxplot, metric = "psnr_phi", config;
    std::vector<std::string> external;
    int threads = 0;
    bool quiet = false;
  } bm;
  auto* benchmark = app.add_subcommand("benchmark", "Monte-Carlo comparison of algorithms");
  benchmark->add_option("--scenes", bm.scenes, "Comma list of gauss, hills, file:<pgm>")
      ->capture_default_str();
  benchmark->add_option("--kind", bm.kind, "interf | abs")->capture_default_str();
  benchmark->add_option("--sigmas", bm.sigmas, "Phase noise levels")
      ->delimiter(',')
      ->capture_default_str();
  benchmark->add_option("--algos", bm.algos, "Comma list of algorithms")->capture_default_str();
  benchmark->add_option("--runs", bm.runs, "Noise realizations per cell")->capture_default_str();
  benchmark->add_option("--seed", bm.seed, "Base seed")->capture_default_str();
  benchmark->add_option("--size", bm.size, "Side of built-in scenes")->capture_default_str();
  benchmark->add_option("--csv", bm.csv, "Per-run results CSV")->required();
  benchmark->add_option("--boxplot", bm.boxplot, "Box statistics of per-cell deltas (CSV)");
  benchmark->add_option("--metric", bm.metric, "Metric for the box statistics")
      ->capture_default_str();
  benchmark->add_option("--external", bm.external, "Results CSVs of other methods to compare");
  benchmark->add_option("--config", bm.config, "Filter configuration (JSON)");
  benchmark->add_option("--threads", bm.threads, "Worker threads (0 = OpenMP default)");
  benchmark->add_flag("--quiet", bm.quiet, "No progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: code=usage message=\"" << quote_message(e.what()) << "\"\n";
    return 2;
  }

  try {
    if (*denoise) {
      FilterConfig cfg = load_config(dn.config);
      cfg.sigma = dn.sigma;
      if (dn.threads) cfg.threads = dn.threads;
      const ComplexField z = read_field(dn.in);
      write_field(run_named_algorithm(z, dn.algo, cfg), dn.out);
    } else if (*simulate) {
      RunManifest manifest;
      sm.scene.kind = parse_phase_kind(sm.kind);
      const TestScene scene = make_scene(sm.scene, manifest);
      const NoisyObservation obs = make_noisy(scene, {sm.sigma_phi, sm.seed, sm.run + 1}, sm.run);
      write_field(obs.z, sm.out);
      write_field(encode_truth(scene), sm.truth);
      out << "sigma=" << format_number(obs.sigma) << '\n';
    } else if (*evaluate) {
      const auto t0 = Clock::now();
      const ComplexField est = read_field(ev.est);
      const TestScene truth = decode_truth(read_field(ev.truth), parse_phase_kind(ev.kind), ev.image);
      if (!est.same_shape(truth.phase)) {
        throw Error("dims_mismatch", "estimate and truth have different dimensions");
      }
      RunManifest manifest;
      manifest.command = "evaluate";
      manifest.config = {{"kind", ev.kind}};
      manifest.input_hashes[ev.est] = hash_file(ev.est);
      manifest.input_hashes[ev.truth] = hash_file(ev.truth);
      const MonteCarloRow row{ev.image, ev.sigma_phi, ev.algo, ev.run, evaluate_estimate(est, truth), 0.0};
      manifest.timing_seconds["evaluate"] = seconds_since(t0);
      write_csv_file(ev.csv, results_table({row}, manifest.hash()));
      write_manifest(manifest, manifest_path_for(ev.csv));
    } else if (*benchmark) {
      const auto t0 = Clock::now();
      RunManifest manifest;
      manifest.command = "benchmark";
      manifest.seed = bm.seed;

      BenchmarkPlan plan;
      plan.base = load_config(bm.config);
      if (bm.threads) plan.base.threads = bm.threads;
      plan.sigmas = bm.sigmas;
      plan.algorithms = split_list(bm.algos);
      plan.runs = bm.runs;
      plan.seed = bm.seed;
      metric_value({}, bm.metric);
      for (const auto& s : split_list(bm.scenes)) {
        plan.scenes.push_back(make_scene({s, parse_phase_kind(bm.kind), bm.size, 0.0}, manifest));
      }
      manifest.config = {{"filter", plan.base},     {"scenes", split_list(bm.scenes)},
                         {"kind", bm.kind},         {"sigmas", bm.sigmas},
                         {"algorithms", plan.algorithms}, {"runs", bm.runs},
                         {"size", bm.size},         {"metric", bm.metric}};
      for (const auto& e : bm.external) manifest.input_hashes[e] = hash_file(e);
      const std::string hash = manifest.hash();

      auto rows = run_benchmark(plan, [&](const MonteCarloRow& r) {
        if (!bm.quiet) {
          err << r.image << " sigma_phi=" << r.sigma_phi << " run=" << r.run << ' ' << r.algorithm
              << " psnr_phi=" << r.metrics.psnr_phi << '\n';
        }
      });
      manifest.timing_seconds["filters"] = 0.0;
      for (const auto& r : rows) manifest.timing_seconds["filters"] += r.wall_seconds;
      write_csv_file(bm.csv, results_table(rows, hash));

      if (!bm.boxplot.empty()) {
        std::vector<MonteCarloRow> compared;
        for (auto& r : rows) {
          if (r.algorithm != kNoisyAlgorithm) compared.push_back(std::move(r));
        }
        for (const auto& e : bm.external) {
          auto ext = rows_from_table(read_csv_file(e));
          compared.insert(compared.end(), ext.begin(), ext.end());
        }
        const BoxplotResult box = boxplot_deltas(mean_over_runs(compared, bm.metric));
        write_csv_file(bm.boxplot, boxplot_table(box, bm.metric, hash));
      }
      manifest.timing_seconds["total"] = seconds_since(t0);
      write_manifest(manifest, manifest_path_for(bm.csv));
    }
    return 0;
  } catch (const Error& e) {
    err << "error: code=" << e.code() << " message=\"" << quote_message(e.what()) << "\"\n";
  } catch (const std::invalid_argument& e) {
    err << "error: code=invalid_argument message=\"" << quote_message(e.what()) << "\"\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: code=bad_config message=\"" << quote_message(e.what()) << "\"\n";
  } catch (const std::exception& e) {
    err << "error: code=internal message=\"" << quote_message(e.what()) << "\"\n";
  }
  return 1;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace cdid
