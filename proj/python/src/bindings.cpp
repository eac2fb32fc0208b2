#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sinest/io.hpp"
#include "sinest/sinest.hpp"

namespace py = pybind11;
using namespace sinest;

namespace {

TimeSeries make_series(const std::vector<double>& values, double dt, double start) {
  return TimeSeries(start, dt, values);
}

std::vector<double> to_vector(const AcfSeries& acf) { return {acf.values().begin(), acf.values().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sinusoid amplitude, frequency and phase estimation";

  py::register_exception<Error>(m, "SinestError", PyExc_ValueError);

  py::class_<SinusoidParams>(m, "SinusoidParams")
      .def(py::init<double, double, double>(), py::arg("amplitude"), py::arg("frequency_hz"), py::arg("phase_rad"))
      .def_property_readonly("amplitude", &SinusoidParams::amplitude)
      .def_property_readonly("frequency_hz", &SinusoidParams::frequency_hz)
      .def_property_readonly("phase_rad", &SinusoidParams::phase_rad)
      .def_property_readonly("omega", &SinusoidParams::omega)
      .def_property_readonly("period", &SinusoidParams::period)
      .def_property_readonly("time_delay", &SinusoidParams::time_delay)
      .def("__call__", [](const SinusoidParams& p, double t) { return eval(p, t); }, py::arg("t"))
      .def("__repr__", [](const SinusoidParams& p) {
        return "SinusoidParams(amplitude=" + std::to_string(p.amplitude()) +
               ", frequency_hz=" + std::to_string(p.frequency_hz()) + ", phase_rad=" + std::to_string(p.phase_rad()) +
               ")";
      });

  m.def(
      "synthesize",
      [](const SinusoidParams& p, std::size_t n, double sigma, std::uint64_t seed, double dt, double start) {
        const auto s = synthesize(p, NoiseSpec{NoiseKind::gaussian, sigma, seed}, n, dt, start);
        return std::vector<double>(s.samples().begin(), s.samples().end());
      },
      py::arg("params"), py::arg("n"), py::arg("sigma") = 0.0, py::arg("seed") = 0, py::arg("dt") = 1.0,
      py::arg("start") = 0.0, "Samples of the sinusoid plus seeded Gaussian noise.");

  m.def(
      "landmarks", [](const SinusoidParams& p) { return io::to_json(landmarks(p)).dump(); }, py::arg("params"),
      "Landmark table as a JSON string.");

  m.def(
      "moving_average",
      [](const std::vector<double>& values, std::size_t k) {
        return moving_average(make_series(values, 1.0, 0.0), k).samples;
      },
      py::arg("values"), py::arg("k"));

  m.def(
      "circular_acf",
      [](const std::vector<double>& values, std::size_t max_lag) {
        return to_vector(circular_acf(make_series(values, 1.0, 0.0), max_lag));
      },
      py::arg("values"), py::arg("max_lag"));
  m.def(
      "model_acf_full", [](const SinusoidParams& p, std::size_t max_lag, double dt) {
        return to_vector(model_acf_full(p, max_lag, dt));
      },
      py::arg("params"), py::arg("max_lag"), py::arg("dt") = 1.0);
  m.def(
      "model_acf_reduced", [](const SinusoidParams& p, std::size_t max_lag, double dt) {
        return to_vector(model_acf_reduced(p, max_lag, dt));
      },
      py::arg("params"), py::arg("max_lag"), py::arg("dt") = 1.0);
  m.def("normalizing_constant", &normalizing_constant, py::arg("params"), py::arg("dt") = 1.0);
  m.def("frequency_from_acf", &frequency_from_acf, py::arg("r"), py::arg("tau"), py::arg("dt") = 1.0);

  m.def(
      "fundamental_frequency",
      [](const std::vector<double>& values, double dt) {
        return fundamental_frequency(dft_magnitude(make_series(values, dt, 0.0)));
      },
      py::arg("values"), py::arg("dt") = 1.0);

  m.def(
      "screen",
      [](const std::vector<double>& values, double far) {
        return io::to_json(screen(make_series(values, 1.0, 0.0), far)).dump();
      },
      py::arg("values"), py::arg("far") = 0.01, "Screening decision as a JSON string.");

  m.def("phase_from_crossover", [](double period, double t_2pi) { return phase_from_crossover(period, t_2pi).radians; },
        py::arg("period"), py::arg("t_2pi"));
  m.def("phase_arctan_at_origin", &phase_arctan_at_origin, py::arg("amplitude"), py::arg("x0"));
  m.def("phase_arcsin_at_time", &phase_arcsin_at_time, py::arg("amplitude"), py::arg("omega"), py::arg("t"),
        py::arg("y"));

  m.def(
      "estimate",
      [](const std::vector<double>& values, double dt, double start, double far, std::size_t ma_k,
         const std::string& objective_range, bool warm_start, bool bypass_screening) {
        PipelineConfig config;
        config.far = far;
        config.ma_k = ma_k;
        config.objective_range = parse_objective_range(objective_range);
        config.warm_start = warm_start;
        config.bypass_screening = bypass_screening;
        const auto input = make_series(values, dt, start);
        return io::to_json(estimate_parameters(input, config), input).dump();
      },
      py::arg("values"), py::arg("dt") = 1.0, py::arg("start") = 0.0, py::arg("far") = 0.01, py::arg("ma_k") = 5,
      py::arg("objective_range") = "one_period", py::arg("warm_start") = false, py::arg("bypass_screening") = false,
      "Full pipeline; the estimation report as a JSON string.");
}
