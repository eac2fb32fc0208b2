#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sinest/acf.hpp"
#include "sinest/estimate.hpp"
#include "sinest/model.hpp"
#include "sinest/screening.hpp"
#include "sinest/smoothing.hpp"
#include "sinest/spectrum.hpp"

namespace sinest::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "sinest.estimation_report/1";
inline constexpr std::string_view kScreenSchema = "sinest.screening_decision/1";
inline constexpr std::string_view kLandmarkSchema = "sinest.landmarks/1";

/// Relative tolerance on sample spacing when reading a record.
inline constexpr double kUniformTolerance = 1e-9;

/// Parses a `t,value` CSV (header row required, LF or CRLF line endings).
/// Throws ParseError for malformed rows, fewer than two samples, or spacing
/// that departs from uniform by more than kUniformTolerance (relative); the
/// message names the offending row (1-based line number).
TimeSeries parse_series_csv(std::istream& in, std::string_view source = "<input>");
TimeSeries read_series_csv(const std::filesystem::path& path);

// CSV emitters. Numbers use the shortest representation that round-trips.
std::string series_csv(const TimeSeries& series);                       // t,value
std::string smoothed_csv(const SmoothedSeries& smoothed);               // t,t_corrected,value
std::string acf_csv(const AcfSeries& acf, double bound);                // lag,value,upper_bound,lower_bound
std::string model_acf_csv(const AcfSeries& full, const AcfSeries& reduced);  // lag,model_full,model_reduced
std::string spectrum_csv(const Spectrum& spectrum);                     // bin,frequency_hz,magnitude

Json to_json(const SinusoidParams& params);
Json to_json(const ScreeningDecision& decision);
Json to_json(const LandmarkTable& table);
Json to_json(const EstimationReport& report, const TimeSeries& input);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace sinest::io
