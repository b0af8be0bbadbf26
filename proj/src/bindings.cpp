#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "beamcode/chancode.hpp"
#include "beamcode/cli.hpp"
#include "beamcode/golomb.hpp"
#include "beamcode/sim.hpp"
#include "beamcode/subcode.hpp"

namespace py = pybind11;
using namespace beamcode;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Beamspace subspace sensing codes: construction, distance analysis "
            "and Monte Carlo simulation.";
  m.attr("__version__") = "0.1.0";

  // ---- spatial ----
  py::class_<SpatialGrid>(m, "SpatialGrid")
      .def_readonly("n_points", &SpatialGrid::n_points)
      .def_readonly("points", &SpatialGrid::points);

  py::class_<SensorSet>(m, "SensorSet")
      .def_readonly("positions", &SensorSet::positions)
      .def("count", &SensorSet::count);

  py::class_<ChannelRealization>(m, "ChannelRealization")
      .def_readonly("alpha", &ChannelRealization::alpha)
      .def_readonly("f_index", &ChannelRealization::f_index);

  py::class_<MinDistanceResult>(m, "MinDistanceResult")
      .def_readonly("distance", &MinDistanceResult::distance)
      .def_readonly("first", &MinDistanceResult::first)
      .def_readonly("second", &MinDistanceResult::second);

  m.def("make_grid", &make_grid, py::arg("n_points"));
  m.def("make_sensor_set", &make_sensor_set, py::arg("positions"));
  m.def("ula", &ula, py::arg("n"));
  m.def("make_channel_realization", &make_channel_realization, py::arg("alpha"),
        py::arg("f_index"), py::arg("grid"));
  m.def("steering_vector", &steering_vector, py::arg("sensors"), py::arg("f"));
  m.def("subspace_distance", &subspace_distance, py::arg("u"), py::arg("v"));
  m.def("min_subspace_distance",
        py::overload_cast<const std::vector<CVec>&>(&min_subspace_distance),
        py::arg("codewords"));

  // ---- golomb ----
  py::class_<QuadraticModulus>(m, "QuadraticModulus")
      .def_readonly("c1", &QuadraticModulus::c1)
      .def_readonly("c0", &QuadraticModulus::c0);

  py::class_<QuadExtElement>(m, "QuadExtElement")
      .def_readonly("a", &QuadExtElement::a)
      .def_readonly("b", &QuadExtElement::b);

  py::class_<GolombRuler>(m, "GolombRuler")
      .def_readonly("marks", &GolombRuler::marks)
      .def_readonly("modulus", &GolombRuler::modulus);

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("find_irreducible_quadratic", &find_irreducible_quadratic, py::arg("p"));
  m.def("find_primitive_element",
        py::overload_cast<int>(&find_primitive_element), py::arg("p"));
  m.def("bose_chowla", &bose_chowla, py::arg("p"));
  m.def("is_sidon", &is_sidon, py::arg("marks"), py::arg("modulus"));
  m.def("extend_ruler", &extend_ruler, py::arg("ruler"), py::arg("extra"));
  m.def("bose_chowla_sensors", &bose_chowla_sensors, py::arg("count"));

  // ---- chancode ----
  py::class_<BinaryCodebook>(m, "BinaryCodebook")
      .def_readonly("length", &BinaryCodebook::length)
      .def_readonly("n_codewords", &BinaryCodebook::n_codewords)
      .def_readonly("linear", &BinaryCodebook::linear)
      .def_readonly("rm_m", &BinaryCodebook::rm_m)
      .def_readonly("rm_r", &BinaryCodebook::rm_r)
      .def("column", [](const BinaryCodebook& code, int n) {
        if (n < 0 || n >= code.n_codewords) throw py::index_error();
        std::vector<int> bits(code.length);
        for (int t = 0; t < code.length; ++t) bits[t] = code.bit(n, t);
        return bits;
      }, py::arg("n"));

  py::class_<BpskCodebook>(m, "BpskCodebook")
      .def_readonly("length", &BpskCodebook::length)
      .def_readonly("n_codewords", &BpskCodebook::n_codewords)
      .def("column", [](const BpskCodebook& code, int n) {
        if (n < 0 || n >= code.n_codewords) throw py::index_error();
        return std::vector<double>(code.column(n), code.column(n) + code.length);
      }, py::arg("n"));

  py::class_<HammingStats>(m, "HammingStats")
      .def(py::init([](int d_min, int d_max) {
             return HammingStats{d_min, d_max, double(d_min) / double(d_max)};
           }),
           py::arg("d_min"), py::arg("d_max"))
      .def_readonly("d_min", &HammingStats::d_min)
      .def_readonly("d_max", &HammingStats::d_max)
      .def_readonly("rho", &HammingStats::rho);

  py::class_<HammingTarget>(m, "HammingTarget")
      .def_readonly("balanced_distance", &HammingTarget::balanced_distance)
      .def_readonly("optimal_d_min", &HammingTarget::optimal_d_min)
      .def_readonly("min_subspace", &HammingTarget::min_subspace);

  py::class_<PruneTrialStats>(m, "PruneTrialStats")
      .def_readonly("dmin_values", &PruneTrialStats::dmin_values)
      .def_readonly("median", &PruneTrialStats::median);

  m.def("reed_muller", &reed_muller, py::arg("m"), py::arg("r"));
  m.def("hamming_stats", &hamming_stats, py::arg("code"));
  m.def("to_bpsk", &to_bpsk, py::arg("code"));
  m.def("bpsk_inner_product",
        [](const std::vector<double>& u, const std::vector<double>& v) {
          return bpsk_inner_product(u, v);
        },
        py::arg("u"), py::arg("v"));
  m.def("min_subspace_from_hamming", &min_subspace_from_hamming, py::arg("stats"), py::arg("T"));
  m.def("optimal_hamming_target", &optimal_hamming_target, py::arg("rho"), py::arg("T"));
  m.def("prune_deterministic", &prune_deterministic, py::arg("code"), py::arg("n"));
  m.def("prune_random", &prune_random, py::arg("code"), py::arg("n"),
        py::arg("trials"), py::arg("seed"));

  // ---- beamform ----
  py::enum_<BeamformerKind>(m, "BeamformerKind")
      .value("BpskInduced", BeamformerKind::BpskInduced)
      .value("AntennaSelection", BeamformerKind::AntennaSelection)
      .value("ConvBeamspace", BeamformerKind::ConvBeamspace);

  py::class_<Beamformer>(m, "Beamformer")
      .def_readonly("n_rows", &Beamformer::n_rows)
      .def_readonly("n_antennas", &Beamformer::n_antennas)
      .def_readonly("kind", &Beamformer::kind)
      .def_readonly("provenance", &Beamformer::provenance)
      .def("row", [](const Beamformer& w, int t) {
        if (t < 0 || t >= w.n_rows) throw py::index_error();
        return CVec(w.row(t), w.row(t) + w.n_antennas);
      }, py::arg("t"))
      .def("to_text", &beamformer_to_text);

  py::class_<Filter>(m, "Filter")
      .def_readonly("taps", &Filter::taps)
      .def("length", &Filter::length);

  py::class_<Beampattern>(m, "Beampattern")
      .def_readonly("values", &Beampattern::values);

  py::class_<IsotropyReport>(m, "IsotropyReport")
      .def_readonly("max_gain_deviation", &IsotropyReport::max_gain_deviation)
      .def_readonly("tolerance", &IsotropyReport::tolerance)
      .def_readonly("isotropic", &IsotropyReport::isotropic);

  m.def("make_filter", &make_filter, py::arg("taps"));
  m.def("boxcar_filter", &boxcar_filter, py::arg("length"));
  m.def("bpsk_beamformer", &bpsk_beamformer, py::arg("codebook"), py::arg("grid"));
  m.def("antenna_selection_beamformer", &antenna_selection_beamformer,
        py::arg("omega"), py::arg("n_antennas"));
  m.def("conv_beamformer", &conv_beamformer, py::arg("filter"), py::arg("shifts"),
        py::arg("n_antennas"));
  m.def("filter_response", &filter_response, py::arg("filter"), py::arg("f"));
  m.def("beampattern", &beampattern, py::arg("filter"), py::arg("grid"));
  m.def("apply_to_ula_steering", &apply_to_ula_steering, py::arg("w"), py::arg("f"));
  m.def("check_isotropy", &check_isotropy, py::arg("w"), py::arg("grid"));

  // ---- subcode ----
  py::class_<SubspaceCode>(m, "SubspaceCode")
      .def_readonly("n_codewords", &SubspaceCode::n_codewords)
      .def_readonly("dim", &SubspaceCode::dim)
      .def_readonly("gains", &SubspaceCode::gains)
      .def_readonly("min_distance", &SubspaceCode::min_distance)
      .def_readonly("provenance", &SubspaceCode::provenance)
      .def("codeword", [](const SubspaceCode& code, int n) {
        if (n < 0 || n >= code.n_codewords) throw py::index_error();
        return CVec(code.codeword(n), code.codeword(n) + code.dim);
      }, py::arg("n"));

  py::enum_<BoundSource>(m, "BoundSource")
      .value("BoseChowla", BoundSource::BoseChowla)
      .value("UlaShift", BoundSource::UlaShift)
      .value("Welch", BoundSource::Welch);

  py::class_<DistanceBounds>(m, "DistanceBounds")
      .def_readonly("lower", &DistanceBounds::lower)
      .def_readonly("upper", &DistanceBounds::upper)
      .def_readonly("source", &DistanceBounds::source);

  py::class_<FilterInvarianceReport>(m, "FilterInvarianceReport")
      .def_readonly("filter_dmin", &FilterInvarianceReport::filter_dmin)
      .def_readonly("antenna_space_dmin", &FilterInvarianceReport::antenna_space_dmin)
      .def_readonly("max_spread", &FilterInvarianceReport::max_spread)
      .def_readonly("tolerance", &FilterInvarianceReport::tolerance)
      .def_readonly("invariant", &FilterInvarianceReport::invariant);

  m.def("build_code", &build_code, py::arg("w"), py::arg("grid"));
  m.def("antenna_space_code", &antenna_space_code, py::arg("sensors"), py::arg("grid"));
  m.def("code_min_distance", &code_min_distance, py::arg("code"));
  m.def("welch_upper_bound", &welch_upper_bound, py::arg("T"), py::arg("n_codewords"));
  m.def("bose_chowla_gap_factor", &bose_chowla_gap_factor, py::arg("T"));
  m.def("bose_chowla_distance_bounds", &bose_chowla_distance_bounds, py::arg("T"), py::arg("n_grid"));
  m.def("ula_shift_distance_bound", &ula_shift_distance_bound);
  m.def("verify_filter_invariance", &verify_filter_invariance, py::arg("shifts"),
        py::arg("filters"), py::arg("grid"), py::arg("n_antennas"));

  // ---- sim ----
  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("snr_db", &SimConfig::snr_db)
      .def_readwrite("n_trials", &SimConfig::n_trials)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("region_lo", &SimConfig::region_lo)
      .def_readwrite("region_hi", &SimConfig::region_hi)
      .def_readwrite("n_workers", &SimConfig::n_workers);

  py::class_<Measurement>(m, "Measurement")
      .def_readonly("y", &Measurement::y)
      .def_readonly("truth", &Measurement::truth);

  py::class_<PePoint>(m, "PePoint")
      .def_readonly("snr_db", &PePoint::snr_db)
      .def_readonly("empirical_pe", &PePoint::empirical_pe)
      .def_readonly("bound_pe", &PePoint::bound_pe)
      .def_readonly("n_trials", &PePoint::n_trials)
      .def_readonly("n_errors", &PePoint::n_errors);

  py::class_<PeCurve>(m, "PeCurve")
      .def_readonly("points", &PeCurve::points)
      .def("to_text", [](const PeCurve& curve) {
        std::ostringstream os;
        write_pe_curve(os, curve);
        return os.str();
      });

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("substream", &RngStream::substream, py::arg("seed"), py::arg("a"),
                  py::arg("b"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_unit", &RngStream::next_unit)
      .def("next_below", &RngStream::next_below, py::arg("n"))
      .def("next_complex_gaussian", &RngStream::next_complex_gaussian, py::arg("sigma"));

  m.def("snr_to_sigma", &snr_to_sigma, py::arg("snr_db"));
  m.def("region_indices", &region_indices, py::arg("grid"), py::arg("lo"), py::arg("hi"));
  m.def("synthesize", &synthesize, py::arg("w"), py::arg("grid"), py::arg("truth"),
        py::arg("sigma"), py::arg("rng"));
  m.def("ml_decode", &ml_decode, py::arg("y"), py::arg("code"));
  m.def("ml_error_bound", &ml_error_bound, py::arg("gain"), py::arg("alpha_mag"),
        py::arg("sigma"), py::arg("d_min"), py::arg("n_grid"));
  m.def("cbs_error_bound", &cbs_error_bound, py::arg("filter"), py::arg("f_k"),
        py::arg("shifts_dmin"), py::arg("alpha_mag"), py::arg("sigma"),
        py::arg("n_grid"), py::arg("T"), py::arg("use_bc_lower_bound") = false);
  m.def("monte_carlo", &monte_carlo, py::arg("cfg"), py::arg("grid"), py::arg("code"),
        py::call_guard<py::gil_scoped_release>());
  m.def("noiseless_exhaustive_recovery", &noiseless_exhaustive_recovery, py::arg("code"));

  // ---- experiments ----
  py::class_<cli::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("experiment", &cli::ExperimentConfig::experiment)
      .def_readwrite("t_samples", &cli::ExperimentConfig::t_samples)
      .def_readwrite("n_grid", &cli::ExperimentConfig::n_grid)
      .def_readwrite("n_antennas", &cli::ExperimentConfig::n_antennas)
      .def_readwrite("rm_m", &cli::ExperimentConfig::rm_m)
      .def_readwrite("rm_r", &cli::ExperimentConfig::rm_r)
      .def_readwrite("filter_lengths", &cli::ExperimentConfig::filter_lengths)
      .def_readwrite("snr_db", &cli::ExperimentConfig::snr_db)
      .def_readwrite("trials", &cli::ExperimentConfig::trials)
      .def_readwrite("seed", &cli::ExperimentConfig::seed)
      .def_readwrite("region_lo", &cli::ExperimentConfig::region_lo)
      .def_readwrite("region_hi", &cli::ExperimentConfig::region_hi)
      .def_readwrite("workers", &cli::ExperimentConfig::workers)
      .def_readwrite("out", &cli::ExperimentConfig::out);

  py::class_<cli::BoundsReport>(m, "BoundsReport")
      .def_readonly("t_samples", &cli::BoundsReport::t_samples)
      .def_readonly("n_grid", &cli::BoundsReport::n_grid)
      .def_readonly("bc_lower", &cli::BoundsReport::bc_lower)
      .def_readonly("bc_upper", &cli::BoundsReport::bc_upper)
      .def_readonly("measured_bc", &cli::BoundsReport::measured_bc)
      .def_readonly("welch", &cli::BoundsReport::welch)
      .def_readonly("ula_bound", &cli::BoundsReport::ula_bound)
      .def_readonly("measured_ula", &cli::BoundsReport::measured_ula)
      .def_readonly("sandwich_pass", &cli::BoundsReport::sandwich_pass)
      .def_readonly("ula_pass", &cli::BoundsReport::ula_pass)
      .def_readonly("crossover", &cli::BoundsReport::crossover)
      .def("passed", &cli::BoundsReport::pass);

  m.def("run_experiment", &cli::run_experiment, py::arg("cfg"),
        py::call_guard<py::gil_scoped_release>());
  m.def("report_bounds", &cli::report_bounds, py::arg("t_samples"), py::arg("n_grid"));
}
