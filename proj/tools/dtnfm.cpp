// Command-line front end: denoise / synth / bench.
//
// Exit codes: 0 success, 2 unreadable input or empty directory,
// 3 invalid configuration, 4 solver divergence (prints the group position).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dtnfm/errors.hpp"
#include "dtnfm/image_io.hpp"
#include "dtnfm/manifest.hpp"
#include "dtnfm/metrics.hpp"
#include "dtnfm/noise_model.hpp"
#include "dtnfm/noise_synth.hpp"
#include "dtnfm/patch_engine.hpp"
#include "dtnfm/presets.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitConfig = 3;
constexpr int kExitDivergence = 4;

std::string format_metric(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

int default_threads() {
  if (const char* env = std::getenv("DTNFM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

// Pipeline/solver flags shared by denoise and bench. Values are applied on
// top of defaults <- preset <- config file, in that order.
struct PipelineFlags {
  std::string preset;
  std::string config_file;
  std::string ablation = "full";
  int threads = default_threads();
  int theta = 0, group_size = 0, patch_size = 0, stride = 0, window = 0;
  double delta = -1.0;
  double lambda = 0.0, alpha = -1.0, rho0 = 0.0, mu = 0.0, eps = 0.0;
  int trunc = -1, max_iters = 0;

  CLI::Option* preset_opt = nullptr;
  CLI::Option* config_opt = nullptr;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* group_opt = nullptr;
  CLI::Option* patch_opt = nullptr;
  CLI::Option* stride_opt = nullptr;
  CLI::Option* window_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* trunc_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* rho0_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* iters_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f) {
  f.preset_opt = cmd->add_option("--preset", f.preset,
                                 "Tuning preset (table5a..table5d)");
  f.config_opt = cmd->add_option(
      "--config", f.config_file,
      "Key=value config file; a previous run manifest works as-is");
  cmd->add_option("--ablation", f.ablation,
                  "Weight-matrix variant: full, drop_C, drop_S");
  cmd->add_option("--threads", f.threads,
                  "Worker cap (default: DTNFM_THREADS env or all cores)");
  f.theta_opt = cmd->add_option("--theta", f.theta, "Outer iterations");
  f.group_opt = cmd->add_option("--group-size", f.group_size,
                                "Similar patches per group (N)");
  f.patch_opt = cmd->add_option("--patch-size", f.patch_size, "Patch side (d)");
  f.stride_opt = cmd->add_option("--stride", f.stride, "Key-patch stride (s)");
  f.window_opt = cmd->add_option("--window", f.window,
                                 "Search-window side (odd)");
  f.delta_opt = cmd->add_option("--delta", f.delta,
                                "Iterative-regularization coefficient");
  f.lambda_opt = cmd->add_option("--lambda", f.lambda, "Regularization weight");
  f.trunc_opt = cmd->add_option("--trunc", f.trunc, "Truncation count (t)");
  f.alpha_opt = cmd->add_option("--alpha", f.alpha, "Frobenius coefficient");
  f.rho0_opt = cmd->add_option("--rho0", f.rho0, "Initial penalty");
  f.mu_opt = cmd->add_option("--mu", f.mu, "Penalty growth factor");
  f.iters_opt = cmd->add_option("--max-iters", f.max_iters,
                                "Solver iteration cap (K)");
  f.eps_opt = cmd->add_option("--eps", f.eps, "Solver stopping tolerance");
}

void apply_config_file(dtnfm::PipelineConfig& cfg, const fs::path& path,
                       bool* eps_from_file) {
  const dtnfm::Manifest m = dtnfm::Manifest::read(path);
  const auto geti = [&](const char* key, int& dst) {
    if (const auto v = m.get_int(key)) dst = static_cast<int>(*v);
  };
  const auto getd = [&](const char* key, double& dst) {
    if (const auto v = m.get_double(key)) dst = *v;
  };
  geti("theta", cfg.theta);
  geti("group_size", cfg.group_size);
  geti("patch_size", cfg.patch_size);
  geti("stride", cfg.stride);
  geti("window", cfg.window);
  getd("delta", cfg.delta);
  getd("lambda", cfg.solver.lambda);
  geti("t", cfg.solver.t);
  getd("alpha", cfg.solver.alpha);
  getd("rho0", cfg.solver.rho0);
  getd("mu", cfg.solver.mu);
  geti("max_iters", cfg.solver.max_iters);
  if (const auto v = m.get_double("eps")) {
    cfg.solver.eps = *v;
    *eps_from_file = true;
  }
  if (const auto v = m.get("ablation")) {
    cfg.ablation = dtnfm::parse_ablation_mode(*v);
  }
}

dtnfm::PipelineConfig build_config(const PipelineFlags& f) {
  dtnfm::PipelineConfig cfg;
  bool eps_pinned = false;

  if (f.preset_opt->count() > 0) {
    const auto preset = dtnfm::preset_config(f.preset);
    if (!preset) {
      throw dtnfm::InvalidInputError("unknown preset: " + f.preset);
    }
    cfg = *preset;
    eps_pinned = true;  // preset resolves eps for its group shape
  }
  if (f.config_opt->count() > 0) {
    apply_config_file(cfg, f.config_file, &eps_pinned);
  }

  if (f.theta_opt->count()) cfg.theta = f.theta;
  if (f.group_opt->count()) cfg.group_size = f.group_size;
  if (f.patch_opt->count()) cfg.patch_size = f.patch_size;
  if (f.stride_opt->count()) cfg.stride = f.stride;
  if (f.window_opt->count()) cfg.window = f.window;
  if (f.delta_opt->count()) cfg.delta = f.delta;
  if (f.lambda_opt->count()) cfg.solver.lambda = f.lambda;
  if (f.trunc_opt->count()) cfg.solver.t = f.trunc;
  if (f.alpha_opt->count()) cfg.solver.alpha = f.alpha;
  if (f.rho0_opt->count()) cfg.solver.rho0 = f.rho0;
  if (f.mu_opt->count()) cfg.solver.mu = f.mu;
  if (f.iters_opt->count()) cfg.solver.max_iters = f.max_iters;

  if (f.eps_opt->count()) {
    cfg.solver.eps = f.eps;
  } else if (!eps_pinned ||
             (f.patch_opt->count() || f.group_opt->count())) {
    // group shape changed (or nothing pinned eps): use the scale-aware default
    dtnfm::resolve_solver_eps(cfg);
  }

  cfg.ablation = dtnfm::parse_ablation_mode(f.ablation);
  cfg.threads = f.threads;
  cfg.validate();
  return cfg;
}

void record_config(dtnfm::Manifest& m, const dtnfm::PipelineConfig& cfg,
                   const std::string& preset) {
  m.set("preset", preset.empty() ? "none" : preset);
  m.set("theta", cfg.theta);
  m.set("group_size", cfg.group_size);
  m.set("patch_size", cfg.patch_size);
  m.set("stride", cfg.stride);
  m.set("window", cfg.window);
  m.set("delta", cfg.delta);
  m.set("lambda", cfg.solver.lambda);
  m.set("t", cfg.solver.t);
  m.set("alpha", cfg.solver.alpha);
  m.set("rho0", cfg.solver.rho0);
  m.set("mu", cfg.solver.mu);
  m.set("max_iters", cfg.solver.max_iters);
  m.set("eps", cfg.solver.eps);
  m.set("ablation", dtnfm::ablation_mode_name(cfg.ablation));
  m.set("threads", cfg.threads);
}

std::array<double, 3> parse_sigma(const std::string& text) {
  std::array<double, 3> sigma{};
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &sigma[0], &sigma[1],
                  &sigma[2], &extra) != 3) {
    throw dtnfm::InvalidInputError("--sigma expects r,g,b (e.g. 30,10,50)");
  }
  for (double s : sigma) {
    if (!(s >= 0.0)) {
      throw dtnfm::InvalidInputError("--sigma entries must be >= 0");
    }
  }
  return sigma;
}

fs::path derive_path(const fs::path& input, const char* suffix,
                     const char* ext) {
  fs::path p = input.parent_path() / input.stem();
  p += suffix;
  p += ext;
  return p;
}

// ---------------------------------------------------------------- denoise --

struct DenoiseArgs {
  std::string input;
  std::string sigma_text;
  std::string out_png, out_float, out_manifest, ref;
  PipelineFlags flags;
};

int run_denoise(const DenoiseArgs& args) {
  const dtnfm::PipelineConfig cfg = build_config(args.flags);
  const std::array<double, 3> sigma0 = parse_sigma(args.sigma_text);

  dtnfm::ColorImage noisy = dtnfm::load_image(args.input);
  cfg.validate_for(noisy.height(), noisy.width());

  const fs::path out_png = args.out_png.empty()
                               ? derive_path(args.input, "_denoised", ".png")
                               : fs::path(args.out_png);
  const fs::path out_float =
      args.out_float.empty() ? derive_path(args.input, "_denoised", ".imgf")
                             : fs::path(args.out_float);
  const fs::path out_manifest =
      args.out_manifest.empty()
          ? derive_path(args.input, "_denoised", ".manifest")
          : fs::path(args.out_manifest);

  dtnfm::DenoiseStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const dtnfm::ColorImage denoised = dtnfm::denoise(noisy, sigma0, cfg, &stats);
  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  dtnfm::save_png(out_png, denoised);
  dtnfm::save_float_image(out_float, denoised);

  dtnfm::Manifest m;
  m.set("tool", std::string("dtnfm-denoise"));
  m.set("schema", 1);
  m.set("input", args.input);
  m.set("output_png", out_png.string());
  m.set("output_imgf", out_float.string());
  m.set("sigma_r", sigma0[0]);
  m.set("sigma_g", sigma0[1]);
  m.set("sigma_b", sigma0[2]);
  record_config(m, cfg, args.flags.preset_opt->count() ? args.flags.preset : "");
  m.set("time_grouping_s", stats.grouping_seconds);
  m.set("time_solving_s", stats.solving_seconds);
  m.set("time_aggregation_s", stats.aggregation_seconds);
  m.set("time_total_s", total_s);

  if (!args.ref.empty()) {
    const dtnfm::ColorImage ref = dtnfm::load_image(args.ref);
    m.set("ref", args.ref);
    m.set("noisy_psnr", dtnfm::psnr(ref, noisy));
    m.set("noisy_ssim", dtnfm::ssim(ref, noisy));
    m.set("denoised_psnr", dtnfm::psnr(ref, denoised));
    m.set("denoised_ssim", dtnfm::ssim(ref, denoised));
    // cross-check on the 8-bit grid, the convention published tables use
    const dtnfm::ColorImage ref_u8 = dtnfm::quantize_to_u8_grid(ref);
    const dtnfm::ColorImage den_u8 = dtnfm::quantize_to_u8_grid(denoised);
    m.set("denoised_psnr_u8", dtnfm::psnr(ref_u8, den_u8));
    m.set("denoised_ssim_u8", dtnfm::ssim(ref_u8, den_u8));
  }
  m.write(out_manifest);

  std::cout << "denoised " << args.input << " -> " << out_png.string() << " ("
            << format_metric(total_s) << " s)\n";
  return kExitOk;
}

// ------------------------------------------------------------------ synth --

struct SynthArgs {
  std::string input;
  std::string sigma_text;
  std::string map_name;
  std::uint64_t seed = 0;
  std::string out_float, out_png, out_manifest;
};

int run_synth(const SynthArgs& args) {
  const std::array<double, 3> sigma0 = parse_sigma(args.sigma_text);
  const dtnfm::ColorImage clean = dtnfm::load_image(args.input);

  dtnfm::NoiseSpec spec;
  spec.sigma0 = sigma0;
  spec.seed = args.seed;
  if (!args.map_name.empty()) {
    if (args.map_name != "peaks") {
      throw dtnfm::InvalidInputError("unknown noise map: " + args.map_name);
    }
    if (clean.height() != clean.width()) {
      throw dtnfm::InvalidInputError(
          "--map peaks requires a square image (map is generated at the "
          "image side length)");
    }
    spec.map = dtnfm::peaks_map(clean.height());
  }

  const dtnfm::ColorImage noisy = dtnfm::add_gaussian(clean, spec);

  const fs::path out_float =
      args.out_float.empty() ? derive_path(args.input, "_noisy", ".imgf")
                             : fs::path(args.out_float);
  const fs::path out_png = args.out_png.empty()
                               ? derive_path(args.input, "_noisy", ".png")
                               : fs::path(args.out_png);
  const fs::path out_manifest =
      args.out_manifest.empty() ? derive_path(args.input, "_noisy", ".manifest")
                                : fs::path(args.out_manifest);

  dtnfm::save_float_image(out_float, noisy);
  dtnfm::save_png(out_png, noisy);

  dtnfm::Manifest m;
  m.set("tool", std::string("dtnfm-synth"));
  m.set("schema", 1);
  m.set("input", args.input);
  m.set("output_imgf", out_float.string());
  m.set("output_png", out_png.string());
  m.set("sigma_r", sigma0[0]);
  m.set("sigma_g", sigma0[1]);
  m.set("sigma_b", sigma0[2]);
  m.set("equivalent_sigma", dtnfm::equivalent_sigma(sigma0));
  m.set("seed", args.seed);
  m.set("rng", std::string(dtnfm::kNoiseRngName));
  m.set("map", args.map_name.empty() ? "none" : args.map_name);
  if (spec.map.has_value()) {
    m.set("map_mean", spec.map->mean());
    m.set("sigma_eff_r", dtnfm::map_mean_sigma(sigma0[0], *spec.map));
    m.set("sigma_eff_g", dtnfm::map_mean_sigma(sigma0[1], *spec.map));
    m.set("sigma_eff_b", dtnfm::map_mean_sigma(sigma0[2], *spec.map));
  }
  m.write(out_manifest);

  std::cout << "synthesized " << out_float.string() << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ bench --

struct BenchArgs {
  std::string clean_dir;
  std::string sigma_text;
  std::string map_name;
  std::uint64_t seed = 0;
  std::string report = "bench_report.csv";
  std::string manifest_path;
  bool ablation_sweep = false;
  PipelineFlags flags;
};

int run_bench(const BenchArgs& args) {
  const dtnfm::PipelineConfig base_cfg = build_config(args.flags);
  const std::array<double, 3> sigma0 = parse_sigma(args.sigma_text);

  std::vector<fs::path> images;
  if (!fs::is_directory(args.clean_dir)) {
    std::cerr << "not a directory: " << args.clean_dir << "\n";
    return kExitIo;
  }
  for (const auto& entry : fs::directory_iterator(args.clean_dir)) {
    const auto ext = entry.path().extension();
    if (ext == ".png" || ext == ".imgf") images.push_back(entry.path());
  }
  std::sort(images.begin(), images.end());
  if (images.empty()) {
    std::cerr << "no .png/.imgf images in " << args.clean_dir << "\n";
    return kExitIo;
  }

  std::vector<dtnfm::AblationMode> variants;
  if (args.ablation_sweep) {
    variants = {dtnfm::AblationMode::kFull, dtnfm::AblationMode::kDropC,
                dtnfm::AblationMode::kDropS};
  } else {
    variants = {base_cfg.ablation};
  }

  std::ofstream csv(args.report, std::ios::trunc);
  if (!csv) {
    std::cerr << "cannot write report " << args.report << "\n";
    return kExitIo;
  }
  csv << "# dtnfm-bench-csv v1\n";
  csv << "# sigma0=" << sigma0[0] << "," << sigma0[1] << "," << sigma0[2]
      << "\n";
  char eqbuf[32];
  std::snprintf(eqbuf, sizeof(eqbuf), "%.6f", dtnfm::equivalent_sigma(sigma0));
  csv << "# equivalent_sigma=" << eqbuf << "\n";
  csv << "# map=" << (args.map_name.empty() ? "none" : args.map_name) << "\n";
  csv << "# seed=" << args.seed << "\n";
  csv << "image,variant,noisy_psnr,noisy_ssim,denoised_psnr,denoised_ssim,"
         "runtime_s\n";

  struct Totals {
    double noisy_psnr = 0, noisy_ssim = 0, psnr = 0, ssim = 0, runtime = 0;
  };
  std::vector<Totals> totals(variants.size());

  for (const fs::path& image_path : images) {
    const dtnfm::ColorImage clean = dtnfm::load_image(image_path);

    dtnfm::NoiseSpec spec;
    spec.sigma0 = sigma0;
    spec.seed = args.seed;
    if (!args.map_name.empty()) {
      if (args.map_name != "peaks") {
        throw dtnfm::InvalidInputError("unknown noise map: " + args.map_name);
      }
      if (clean.height() != clean.width()) {
        throw dtnfm::InvalidInputError(
            "--map peaks requires square images: " + image_path.string());
      }
      spec.map = dtnfm::peaks_map(clean.height());
    }
    const dtnfm::ColorImage noisy = dtnfm::add_gaussian(clean, spec);
    const double noisy_psnr = dtnfm::psnr(clean, noisy);
    const double noisy_ssim = dtnfm::ssim(clean, noisy);

    for (std::size_t vi = 0; vi < variants.size(); ++vi) {
      dtnfm::PipelineConfig cfg = base_cfg;
      cfg.ablation = variants[vi];
      const auto t0 = std::chrono::steady_clock::now();
      const dtnfm::ColorImage denoised = dtnfm::denoise(noisy, sigma0, cfg);
      const double runtime =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      const double den_psnr = dtnfm::psnr(clean, denoised);
      const double den_ssim = dtnfm::ssim(clean, denoised);

      csv << image_path.stem().string() << ","
          << dtnfm::ablation_mode_name(variants[vi]) << ","
          << format_metric(noisy_psnr) << "," << format_metric(noisy_ssim)
          << "," << format_metric(den_psnr) << "," << format_metric(den_ssim)
          << "," << format_metric(runtime) << "\n";

      totals[vi].noisy_psnr += noisy_psnr;
      totals[vi].noisy_ssim += noisy_ssim;
      totals[vi].psnr += den_psnr;
      totals[vi].ssim += den_ssim;
      totals[vi].runtime += runtime;
    }
  }

  const double n = static_cast<double>(images.size());
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    csv << "average," << dtnfm::ablation_mode_name(variants[vi]) << ","
        << format_metric(totals[vi].noisy_psnr / n) << ","
        << format_metric(totals[vi].noisy_ssim / n) << ","
        << format_metric(totals[vi].psnr / n) << ","
        << format_metric(totals[vi].ssim / n) << ","
        << format_metric(totals[vi].runtime / n) << "\n";
  }
  csv.close();

  dtnfm::Manifest m;
  m.set("tool", std::string("dtnfm-bench"));
  m.set("schema", 1);
  m.set("clean_dir", args.clean_dir);
  m.set("report", args.report);
  m.set("images", static_cast<std::int64_t>(images.size()));
  m.set("sigma_r", sigma0[0]);
  m.set("sigma_g", sigma0[1]);
  m.set("sigma_b", sigma0[2]);
  m.set("equivalent_sigma", dtnfm::equivalent_sigma(sigma0));
  m.set("map", args.map_name.empty() ? "none" : args.map_name);
  m.set("seed", args.seed);
  m.set("rng", std::string(dtnfm::kNoiseRngName));
  m.set("ablation_sweep", args.ablation_sweep ? 1 : 0);
  record_config(m, base_cfg,
                args.flags.preset_opt->count() ? args.flags.preset : "");
  const fs::path manifest_path = args.manifest_path.empty()
                                     ? fs::path(args.report).replace_extension(
                                           ".manifest")
                                     : fs::path(args.manifest_path);
  m.write(manifest_path);

  std::cout << "report written to " << args.report << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DtNFM color-image denoiser"};
  app.require_subcommand(1);

  DenoiseArgs denoise_args;
  CLI::App* denoise_cmd =
      app.add_subcommand("denoise", "Denoise one image");
  denoise_cmd->add_option("--in", denoise_args.input, "Noisy input (.png/.imgf)")
      ->required();
  denoise_cmd
      ->add_option("--sigma", denoise_args.sigma_text,
                   "Noise std per channel: r,g,b")
      ->required();
  denoise_cmd->add_option("--out", denoise_args.out_png, "Denoised PNG path");
  denoise_cmd->add_option("--float-out", denoise_args.out_float,
                          "Denoised float container path");
  denoise_cmd->add_option("--manifest", denoise_args.out_manifest,
                          "Run manifest path");
  denoise_cmd->add_option("--ref", denoise_args.ref,
                          "Clean reference; records metrics in the manifest");
  add_pipeline_flags(denoise_cmd, denoise_args.flags);

  SynthArgs synth_args;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Add synthetic Gaussian noise");
  synth_cmd->add_option("--in", synth_args.input, "Clean input (.png/.imgf)")
      ->required();
  synth_cmd
      ->add_option("--sigma", synth_args.sigma_text,
                   "Noise std per channel: r,g,b")
      ->required();
  synth_cmd->add_option("--map", synth_args.map_name,
                        "Spatial modulation map (peaks)");
  synth_cmd->add_option("--seed", synth_args.seed, "RNG seed");
  synth_cmd->add_option("--out", synth_args.out_float,
                        "Noisy float container path");
  synth_cmd->add_option("--png", synth_args.out_png, "Noisy preview PNG path");
  synth_cmd->add_option("--manifest", synth_args.out_manifest,
                        "Run manifest path");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Synthesize noise over a directory of clean images, denoise, "
               "and report PSNR/SSIM as CSV");
  bench_cmd
      ->add_option("--clean-dir", bench_args.clean_dir,
                   "Directory of clean .png/.imgf images")
      ->required();
  bench_cmd
      ->add_option("--sigma", bench_args.sigma_text,
                   "Noise std per channel: r,g,b")
      ->required();
  bench_cmd->add_option("--map", bench_args.map_name,
                        "Spatial modulation map (peaks)");
  bench_cmd->add_option("--seed", bench_args.seed, "RNG seed");
  bench_cmd->add_option("--report", bench_args.report, "CSV output path");
  bench_cmd->add_option("--manifest", bench_args.manifest_path,
                        "Run manifest path");
  bench_cmd->add_flag("--ablation-sweep", bench_args.ablation_sweep,
                      "Run full, drop_C and drop_S per image");
  add_pipeline_flags(bench_cmd, bench_args.flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (denoise_cmd->parsed()) return run_denoise(denoise_args);
    if (synth_cmd->parsed()) return run_synth(synth_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
    return kExitConfig;
  } catch (const dtnfm::PipelineDivergenceError& e) {
    std::cerr << "solver divergence at group (" << e.key_row() << ","
              << e.key_col() << "), iteration " << e.iteration() << ": "
              << e.what() << "\n";
    return kExitDivergence;
  } catch (const dtnfm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const dtnfm::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
