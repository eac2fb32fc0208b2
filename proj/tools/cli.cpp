#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sinest/error.hpp"
#include "sinest/estimate.hpp"
#include "sinest/io.hpp"

namespace sinest::cli {

namespace fs = std::filesystem;

namespace {

struct Sink {
  std::ostream& out;

  // "-" writes to stdout; relative paths resolve under $SINEST_OUTPUT_DIR when set.
  void write(const std::string& target, const std::string& content) const {
    if (target == "-") {
      out << content;
      return;
    }
    io::write_file_atomic(resolve(target), content);
  }

  static fs::path resolve(const std::string& target) {
    fs::path p(target);
    if (p.is_relative()) {
      if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') return fs::path(dir) / p;
    }
    return p;
  }
};

std::string default_name(const std::string& input, const char* suffix) {
  return fs::path(input).stem().string() + suffix;
}

struct PipelineOptions {
  double far = 0.01;
  std::size_t ma_k = 5;
  std::string objective_range = "one_period";
  bool warm_start = false;
  std::size_t max_lag = 0;  // 0 = auto
  std::string frequency_source = "fft";
  bool bypass_screening = false;
  std::size_t fft_pad_to = 0;

  PipelineConfig config() const {
    PipelineConfig c;
    c.far = far;
    c.ma_k = ma_k;
    c.objective_range = parse_objective_range(objective_range);
    c.warm_start = warm_start;
    if (max_lag > 0) c.max_lag = max_lag;
    c.frequency_source = parse_frequency_source(frequency_source);
    c.bypass_screening = bypass_screening;
    c.fft_pad_to = fft_pad_to;
    c.validate();
    return c;
  }
};

void add_far(CLI::App* cmd, double& far) {
  cmd->add_option("--far", far, "False alarm rate for screening bounds, in (0, 0.5)")->capture_default_str();
}

struct SinusoidOptions {
  double amplitude = 1.0;
  double frequency = 0.05;
  double phase = 0.0;
  bool degrees = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--amplitude,-A", amplitude, "Amplitude")->capture_default_str();
    cmd->add_option("--frequency,-f", frequency, "Frequency in Hz")->capture_default_str();
    cmd->add_option("--phase,-p", phase, "Initial phase (radians unless --degrees)")->capture_default_str();
    cmd->add_flag("--degrees", degrees, "Interpret --phase in degrees");
  }
  SinusoidParams params() const { return SinusoidParams(amplitude, frequency, degrees ? phase * kPi / 180.0 : phase); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amplitude, frequency and phase estimation for noisy sinusoids"};
  app.require_subcommand(1);
  const Sink sink{out};

  // generate
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic record as t,value CSV");
  SinusoidOptions gen_sin;
  gen_sin.add(generate);
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::size_t n = 100;
  double dt = 1.0, start = 0.0;
  std::string gen_out = "synthetic.csv";
  generate->add_option("--sigma", sigma, "Gaussian noise standard deviation")->capture_default_str();
  generate->add_option("--seed", seed, "Noise generator seed")->capture_default_str();
  generate->add_option("--n", n, "Number of samples")->capture_default_str();
  generate->add_option("--dt", dt, "Sample interval in seconds")->capture_default_str();
  generate->add_option("--start", start, "Time of the first sample")->capture_default_str();
  generate->add_option("--out,-o", gen_out, "Output CSV path ('-' for stdout)")->capture_default_str();

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Screen a record and estimate A, f and phi");
  std::string est_in, est_out, series_dir;
  PipelineOptions pipe;
  estimate->add_option("input", est_in, "Input t,value CSV")->required();
  add_far(estimate, pipe.far);
  estimate->add_option("--ma-k", pipe.ma_k, "Moving average window")->capture_default_str();
  estimate->add_option("--objective-range", pipe.objective_range, "Phase objective range")
      ->check(CLI::IsMember({"one_period", "full_record"}))
      ->capture_default_str();
  estimate->add_flag("--warm-start", pipe.warm_start, "Narrow the phase sweep around the crossover estimate");
  estimate->add_option("--max-lag", pipe.max_lag, "Discrete ACF lags (default N-1)");
  estimate->add_option("--frequency-source", pipe.frequency_source, "Primary frequency estimate")
      ->check(CLI::IsMember({"fft", "acf_arccos", "ma_period"}))
      ->capture_default_str();
  estimate->add_option("--fft-pad", pipe.fft_pad_to, "Zero-pad the FFT input to this length");
  estimate->add_flag("--bypass-screening", pipe.bypass_screening, "Skip the signal/noise gates");
  estimate->add_option("--out,-o", est_out, "Report JSON path (default <input stem>.report.json)");
  estimate->add_option("--series-dir", series_dir, "Also write plot-ready CSV series into this directory");

  // screen
  auto* screen_cmd = app.add_subcommand("screen", "Run the two-gate signal/noise screen");
  std::string scr_in, scr_out, scr_acf_out;
  double scr_far = 0.01;
  screen_cmd->add_option("input", scr_in, "Input t,value CSV")->required();
  add_far(screen_cmd, scr_far);
  screen_cmd->add_option("--out,-o", scr_out, "Decision JSON path (default <input stem>.screen.json)");
  screen_cmd->add_option("--acf-out", scr_acf_out, "Also write the circular ACF with bounds as CSV");

  // acf
  auto* acf_cmd = app.add_subcommand("acf", "Discrete circular ACF with significance bounds");
  std::string acf_in, acf_out;
  double acf_far = 0.01;
  std::size_t acf_lag = 0;
  acf_cmd->add_option("input", acf_in, "Input t,value CSV")->required();
  add_far(acf_cmd, acf_far);
  acf_cmd->add_option("--max-lag", acf_lag, "Largest lag (default N-1)");
  acf_cmd->add_option("--out,-o", acf_out, "Output CSV path (default <input stem>.acf.csv)");

  // model-acf
  auto* model_cmd = app.add_subcommand("model-acf", "Full and reduced model ACFs of a sinusoid");
  SinusoidOptions model_sin;
  model_sin.add(model_cmd);
  std::size_t model_lag = 50;
  double model_dt = 1.0;
  std::string model_out = "model_acf.csv";
  model_cmd->add_option("--max-lag", model_lag, "Largest lag")->capture_default_str();
  model_cmd->add_option("--dt", model_dt, "Lag spacing in seconds")->capture_default_str();
  model_cmd->add_option("--out,-o", model_out, "Output CSV path")->capture_default_str();

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "DFT magnitude spectrum");
  std::string spec_in, spec_out;
  std::size_t pad_to = 0;
  spec_cmd->add_option("input", spec_in, "Input t,value CSV")->required();
  spec_cmd->add_option("--pad-to", pad_to, "Zero-pad to this many samples");
  spec_cmd->add_option("--out,-o", spec_out, "Output CSV path (default <input stem>.spectrum.csv)");

  // landmarks
  auto* land_cmd = app.add_subcommand("landmarks", "Zero crossings, extrema and period decomposition");
  SinusoidOptions land_sin;
  land_sin.add(land_cmd);
  std::string land_out = "-";
  land_cmd->add_option("--out,-o", land_out, "Output JSON path")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (generate->parsed()) {
      const auto series = synthesize(gen_sin.params(), NoiseSpec{NoiseKind::gaussian, sigma, seed}, n, dt, start);
      sink.write(gen_out, io::series_csv(series));
      return kExitOk;
    }

    if (estimate->parsed()) {
      const auto input = io::read_series_csv(est_in);
      const auto config = pipe.config();
      const auto report = estimate_parameters(input, config);
      const auto json = io::to_json(report, input);
      sink.write(est_out.empty() ? default_name(est_in, ".report.json") : est_out, json.dump(2) + "\n");

      if (!series_dir.empty()) {
        const fs::path dir = Sink::resolve(series_dir);
        fs::create_directories(dir);
        io::write_file_atomic(dir / "raw.csv", io::series_csv(input));
        const auto acf = report.discrete_acf
                             ? *report.discrete_acf
                             : circular_acf(input, std::min(config.max_lag.value_or(input.size() - 1), input.size() - 1));
        io::write_file_atomic(dir / "acf.csv", io::acf_csv(acf, acf_bounds(input.size(), config.far)));
        if (report.smoothed) io::write_file_atomic(dir / "smoothed.csv", io::smoothed_csv(*report.smoothed));
        if (report.spectrum) io::write_file_atomic(dir / "spectrum.csv", io::spectrum_csv(*report.spectrum));
        if (report.params) {
          const std::size_t lags = std::max<std::size_t>(1, input.size() / 2);
          io::write_file_atomic(dir / "model_acf.csv",
                                io::model_acf_csv(model_acf_full(*report.params, lags, input.dt()),
                                                  model_acf_reduced(*report.params, lags, input.dt())));
        }
      }
      if (!report.is_signal()) {
        err << "screening rejected the input as noise\n";
        return kExitNoise;
      }
      for (const auto& w : report.warnings) err << "warning: " << w << "\n";
      return kExitOk;
    }

    if (screen_cmd->parsed()) {
      const auto input = io::read_series_csv(scr_in);
      const auto decision = screen(input, scr_far);
      auto json = io::to_json(decision);
      json["schema"] = io::kScreenSchema;
      sink.write(scr_out.empty() ? default_name(scr_in, ".screen.json") : scr_out, json.dump(2) + "\n");
      if (!scr_acf_out.empty()) {
        sink.write(scr_acf_out, io::acf_csv(circular_acf(input, input.size() - 1), decision.acf_bound));
      }
      return decision.verdict == Verdict::signal ? kExitOk : kExitNoise;
    }

    if (acf_cmd->parsed()) {
      const auto input = io::read_series_csv(acf_in);
      const std::size_t lags = acf_lag == 0 ? input.size() - 1 : acf_lag;
      const auto acf = circular_acf(input, lags);
      sink.write(acf_out.empty() ? default_name(acf_in, ".acf.csv") : acf_out,
                 io::acf_csv(acf, acf_bounds(input.size(), acf_far)));
      return kExitOk;
    }

    if (model_cmd->parsed()) {
      const auto params = model_sin.params();
      sink.write(model_out, io::model_acf_csv(model_acf_full(params, model_lag, model_dt),
                                              model_acf_reduced(params, model_lag, model_dt)));
      return kExitOk;
    }

    if (spec_cmd->parsed()) {
      const auto input = io::read_series_csv(spec_in);
      sink.write(spec_out.empty() ? default_name(spec_in, ".spectrum.csv") : spec_out,
                 io::spectrum_csv(dft_magnitude(input, pad_to)));
      return kExitOk;
    }

    if (land_cmd->parsed()) {
      sink.write(land_out, io::to_json(landmarks(land_sin.params())).dump(2) + "\n");
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace sinest::cli
