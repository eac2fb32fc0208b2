#include "sinest/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <system_error>
#include <vector>

#include <fmt/format.h>
#include <unistd.h>

#include "sinest/error.hpp"

namespace sinest::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::string_view source, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(fmt::format("{}: row {}: cannot parse number '{}'", source, line, field));
  }
  return value;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

TimeSeries parse_series_csv(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError(fmt::format("{}: empty file", source));
  ++line_no;
  const auto header = trim(line);
  if (header != "t,value") {
    throw ParseError(fmt::format("{}: row 1: expected header 't,value', got '{}'", source, header));
  }

  std::vector<double> times;
  std::vector<double> values;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(fmt::format("{}: row {}: expected two comma-separated fields", source, line_no));
    }
    times.push_back(parse_number(row.substr(0, comma), source, line_no));
    values.push_back(parse_number(row.substr(comma + 1), source, line_no));
    lines.push_back(line_no);
  }

  if (values.size() < 2) {
    throw ParseError(fmt::format("{}: need at least 2 data rows, got {}", source, values.size()));
  }

  const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  if (!(dt > 0.0)) throw ParseError(fmt::format("{}: time column must be increasing", source));
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - dt) > kUniformTolerance * dt) {
      throw ParseError(fmt::format("{}: row {}: non-uniform sampling (step {} vs mean step {})", source, lines[i],
                                   step, dt));
    }
  }
  return TimeSeries(times.front(), dt, std::move(values));
}

TimeSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
  return parse_series_csv(in, path.string());
}

std::string series_csv(const TimeSeries& series) {
  std::string out = "t,value\n";
  for (std::size_t i = 0; i < series.size(); ++i) out += fmt::format("{},{}\n", series.time(i), series[i]);
  return out;
}

std::string smoothed_csv(const SmoothedSeries& smoothed) {
  std::string out = "t,t_corrected,value\n";
  for (std::size_t i = 0; i < smoothed.size(); ++i) {
    out += fmt::format("{},{},{}\n", smoothed.time(i), smoothed.center_time(i), smoothed.samples[i]);
  }
  return out;
}

std::string acf_csv(const AcfSeries& acf, double bound) {
  std::string out = "lag,value,upper_bound,lower_bound\n";
  for (std::size_t lag = 0; lag <= acf.max_lag(); ++lag) {
    out += fmt::format("{},{},{},{}\n", lag, acf[lag], bound, -bound);
  }
  return out;
}

std::string model_acf_csv(const AcfSeries& full, const AcfSeries& reduced) {
  if (full.max_lag() != reduced.max_lag()) throw InvalidArgument("model ACF columns differ in length");
  std::string out = "lag,model_full,model_reduced\n";
  for (std::size_t lag = 0; lag <= full.max_lag(); ++lag) {
    out += fmt::format("{},{},{}\n", lag, full[lag], reduced[lag]);
  }
  return out;
}

std::string spectrum_csv(const Spectrum& spectrum) {
  std::string out = "bin,frequency_hz,magnitude\n";
  for (std::size_t m = 0; m < spectrum.magnitudes.size(); ++m) {
    out += fmt::format("{},{},{}\n", m, spectrum.frequency(m), spectrum.magnitudes[m]);
  }
  return out;
}

Json to_json(const SinusoidParams& params) {
  Json j;
  j["amplitude"] = params.amplitude();
  j["frequency_hz"] = params.frequency_hz();
  j["phase_rad"] = params.phase_rad();
  j["phase_deg"] = params.phase_rad() * 180.0 / kPi;
  j["omega_rad_per_s"] = params.omega();
  j["period_s"] = params.period();
  j["time_delay_s"] = params.time_delay();
  return j;
}

Json to_json(const ScreeningDecision& d) {
  Json j;
  j["far"] = d.far;
  j["verdict"] = to_string(d.verdict);
  j["gate_failed"] = to_string(d.gate_failed);
  j["runs_statistic_z"] = d.runs_statistic;
  j["runs_count"] = d.runs_count;
  j["n_above"] = d.n_above;
  j["n_below"] = d.n_below;
  j["acf_computed"] = d.acf_computed;
  j["acf_bound"] = d.acf_bound;
  j["acf_exceedances"] = d.acf_exceedances;
  j["required_exceedances"] = d.required_exceedances;
  j["acf_sign_alternates"] = d.acf_sign_alternates;
  return j;
}

Json to_json(const LandmarkTable& t) {
  const auto mark = [](const Landmark& m) {
    Json j;
    j["time_s"] = m.time;
    j["value"] = m.value;
    return j;
  };
  Json j;
  j["schema"] = kLandmarkSchema;
  j["t0"] = mark(t.t0);
  j["t_half_pi"] = mark(t.t_half_pi);
  j["t_pi"] = mark(t.t_pi);
  j["t_three_half_pi"] = mark(t.t_three_half_pi);
  j["t_two_pi"] = mark(t.t_two_pi);
  j["t_five_half_pi"] = mark(t.t_five_half_pi);
  j["value_at_origin"] = t.value_at_origin;
  j["rise_to_first_zero_s"] = t.rise_to_first_zero;
  j["half_cycle_s"] = t.half_cycle;
  j["rise_to_next_peak_s"] = t.rise_to_next_peak;
  j["period_s"] = t.period;
  return j;
}

Json to_json(const EstimationReport& r, const TimeSeries& input) {
  Json j;
  j["schema"] = kReportSchema;
  j["verdict"] = r.is_signal() ? "signal" : "noise";

  Json in;
  in["n"] = input.size();
  in["start_time_s"] = input.start_time();
  in["dt_s"] = input.dt();
  j["input"] = in;

  j["screening"] = r.screening ? to_json(*r.screening) : Json(nullptr);
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);

  if (!r.is_signal()) {
    // Same key order as a signal report.
    for (const char* key : {"frequency_source", "frequency_checks", "t_pi_s", "t_2pi_s", "delta_t_s",
                            "objective_value", "objective_range", "phase_cross_checks_rad", "smoothing_k"}) {
      j[key] = nullptr;
    }
    j["warnings"] = r.warnings;
    j["fitted_model_acf"] = nullptr;
    return j;
  }

  j["frequency_source"] = to_string(r.frequency_source);
  const auto& fc = r.frequency_checks;
  Json checks;
  checks["fft_hz"] = fc.fft_hz;
  checks["fft_bin"] = fc.fft_bin;
  checks["acf_period_hz"] = optional_number(fc.acf_period_hz);
  checks["acf_period_lag"] = optional_count(fc.acf_period_lag);
  checks["acf_arccos_hz"] = optional_number(fc.acf_arccos_hz);
  checks["acf_arccos_lag"] = optional_count(fc.acf_arccos_lag);
  checks["ma_period_hz"] = optional_number(fc.ma_period_hz);
  j["frequency_checks"] = checks;

  j["t_pi_s"] = optional_number(r.t_pi);
  j["t_2pi_s"] = optional_number(r.t_2pi);
  j["delta_t_s"] = r.delta_t;
  j["objective_value"] = r.objective_value;
  j["objective_range"] = to_string(r.objective_range);

  Json phases = Json::object();
  for (const char* key : {"grid_search", "crossover", "landmarks_k1", "arctan", "arcsin"}) {
    const auto it = r.phase_cross_checks.find(key);
    phases[key] = it == r.phase_cross_checks.end() ? Json(nullptr) : Json(it->second);
  }
  j["phase_cross_checks_rad"] = phases;
  j["smoothing_k"] = r.smoothing_k;
  j["warnings"] = r.warnings;
  if (r.fitted_model_acf) {
    const auto v = r.fitted_model_acf->values();
    j["fitted_model_acf"] = std::vector<double>(v.begin(), v.end());
  } else {
    j["fitted_model_acf"] = nullptr;
  }
  return j;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target = fs::absolute(path);
  if (target.has_parent_path() && !fs::is_directory(target.parent_path())) {
    throw Error(fmt::format("output directory '{}' does not exist", target.parent_path().string()));
  }
  fs::path tmp = target;
  tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(fmt::format("cannot write '{}'", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(fmt::format("failed writing '{}'", tmp.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(fmt::format("cannot move output into '{}'", target.string()));
  }
}

}  // namespace sinest::io
