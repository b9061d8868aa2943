#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secdof/binning.hpp"
#include "secdof/experiment.hpp"
#include "secdof/secrecy.hpp"
#include "secdof/validate.hpp"

namespace py = pybind11;
using namespace secdof;

namespace {

Tolerance tol_of(double eps) { return Tolerance(eps); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jamming precoders, secrecy rates and SDoF estimation for the "
            "K-user MIMO MAC and the 2-user MIMO interference channel";

  py::register_exception<Error>(m, "Error");

  py::enum_<Kind>(m, "Kind")
      .value("MAC", Kind::MAC)
      .value("IC", Kind::IC);
  py::enum_<Scheme>(m, "Scheme")
      .value("Auto", Scheme::Auto)
      .value("Nullspace", Scheme::Nullspace)
      .value("Aligned", Scheme::Aligned)
      .value("Hybrid", Scheme::Hybrid);
  py::enum_<Regime>(m, "Regime")
      .value("BelowN", Regime::BelowN)
      .value("Middle", Regime::Middle)
      .value("AboveN", Regime::AboveN);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init([](Kind kind, int num_tx, int tx_antennas, int rx_antennas,
                       int max_eve_antennas, double alpha, Scheme scheme,
                       int eavesdroppers) {
             SystemConfig cfg;
             cfg.kind = kind;
             cfg.num_tx = num_tx;
             cfg.tx_antennas = tx_antennas;
             cfg.rx_antennas = rx_antennas;
             cfg.max_eve_antennas = max_eve_antennas;
             cfg.alpha = alpha;
             cfg.scheme = scheme;
             cfg.eavesdroppers = eavesdroppers;
             return cfg;
           }),
           py::arg("kind") = Kind::MAC, py::arg("num_tx") = 2,
           py::arg("tx_antennas") = 3, py::arg("rx_antennas") = 4,
           py::arg("max_eve_antennas") = 2, py::arg("alpha") = 0.5,
           py::arg("scheme") = Scheme::Auto, py::arg("eavesdroppers") = 1)
      .def_readwrite("kind", &SystemConfig::kind)
      .def_readwrite("num_tx", &SystemConfig::num_tx)
      .def_readwrite("tx_antennas", &SystemConfig::tx_antennas)
      .def_readwrite("rx_antennas", &SystemConfig::rx_antennas)
      .def_readwrite("max_eve_antennas", &SystemConfig::max_eve_antennas)
      .def_readwrite("alpha", &SystemConfig::alpha)
      .def_readwrite("scheme", &SystemConfig::scheme)
      .def_readwrite("eavesdroppers", &SystemConfig::eavesdroppers)
      .def(py::self == py::self);

  py::class_<ChannelSet>(m, "ChannelSet")
      .def_readonly("kind", &ChannelSet::kind)
      .def_readonly("direct", &ChannelSet::direct)
      .def_readonly("cross", &ChannelSet::cross)
      .def_readonly("eve", &ChannelSet::eve)
      .def_readonly("noise_var", &ChannelSet::noise_var);

  py::class_<StreamAllocation>(m, "StreamAllocation")
      .def_readonly("message", &StreamAllocation::message)
      .def_readonly("null_jam", &StreamAllocation::null_jam)
      .def_readonly("aligned_jam", &StreamAllocation::aligned_jam)
      .def("total_message", &StreamAllocation::total_message)
      .def("total_jam", &StreamAllocation::total_jam);

  py::class_<GroupPlan>(m, "GroupPlan")
      .def_readonly("group_size", &GroupPlan::group_size)
      .def_readonly("aligned_total", &GroupPlan::aligned_total)
      .def_readonly("members", &GroupPlan::members)
      .def_readonly("group_streams", &GroupPlan::group_streams)
      .def_readonly("member_streams", &GroupPlan::member_streams)
      .def_readonly("intersection", &GroupPlan::intersection);

  py::class_<PrecoderSet>(m, "PrecoderSet")
      .def_readonly("message", &PrecoderSet::message)
      .def_readonly("jam", &PrecoderSet::jam)
      .def_readonly("post", &PrecoderSet::post);

  py::class_<PrecoderBuild>(m, "PrecoderBuild")
      .def_readonly("precoders", &PrecoderBuild::precoders)
      .def_readonly("allocation", &PrecoderBuild::allocation)
      .def_readonly("plan", &PrecoderBuild::plan)
      .def_readonly("scheme", &PrecoderBuild::scheme);

  py::class_<PowerPolicy>(m, "PowerPolicy")
      .def(py::init([](std::vector<double> p_db, double alpha) {
             PowerPolicy policy;
             policy.p_db = std::move(p_db);
             policy.alpha = alpha;
             return policy;
           }),
           py::arg("p_db"), py::arg("alpha") = 0.5)
      .def_readwrite("p_db", &PowerPolicy::p_db)
      .def_readwrite("alpha", &PowerPolicy::alpha);

  py::class_<RatePoint>(m, "RatePoint")
      .def_readonly("p_db", &RatePoint::p_db)
      .def_readonly("secrecy_bits", &RatePoint::secrecy_bits)
      .def_readonly("leak_bits", &RatePoint::leak_bits)
      .def_readonly("trials", &RatePoint::trials);

  py::class_<RateCurve>(m, "RateCurve")
      .def_readonly("points", &RateCurve::points)
      .def_readonly("slope", &RateCurve::slope)
      .def_readonly("slope_stderr", &RateCurve::slope_stderr);

  py::class_<SdofReport>(m, "SdofReport")
      .def_readonly("upper_bound", &SdofReport::upper_bound)
      .def_readonly("achievable", &SdofReport::achievable)
      .def_readonly("simulated_slope", &SdofReport::simulated_slope)
      .def_readonly("regime", &SdofReport::regime)
      .def_readonly("feasible", &SdofReport::feasible)
      .def_readonly("infeasible_reason", &SdofReport::infeasible_reason);

  py::class_<RatePair>(m, "RatePair")
      .def_readonly("legit_bits", &RatePair::legit_bits)
      .def_readonly("leak_bits", &RatePair::leak_bits);

  py::class_<SlopeFit>(m, "SlopeFit")
      .def_readonly("slope", &SlopeFit::slope)
      .def_readonly("stderr", &SlopeFit::stderr_);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("curve", &SweepResult::curve)
      .def_readonly("report", &SweepResult::report)
      .def_readonly("per_trial", &SweepResult::per_trial);

  py::class_<DiscreteChannel>(m, "DiscreteChannel")
      .def(py::init([](Eigen::MatrixXd transition) {
             DiscreteChannel ch{std::move(transition)};
             check_channel(ch);
             return ch;
           }),
           py::arg("transition"))
      .def_readonly("transition", &DiscreteChannel::transition)
      .def_static("binary_symmetric", &DiscreteChannel::binary_symmetric)
      .def_static("noiseless", &DiscreteChannel::noiseless)
      .def_static("uniform_output", &DiscreteChannel::uniform_output);

  py::class_<WiretapCode>(m, "WiretapCode")
      .def_readonly("block_length", &WiretapCode::block_length)
      .def_readonly("total_rate", &WiretapCode::total_rate)
      .def_readonly("secret_rate", &WiretapCode::secret_rate)
      .def_readonly("alphabet", &WiretapCode::alphabet)
      .def_readonly("bins", &WiretapCode::bins)
      .def("bin_count", &WiretapCode::bin_count)
      .def("bin_size", &WiretapCode::bin_size);

  py::class_<DecodeResult>(m, "DecodeResult")
      .def_readonly("bin", &DecodeResult::bin)
      .def_readonly("index", &DecodeResult::index);

  py::class_<Equivocation>(m, "Equivocation")
      .def_readonly("conditional_bits", &Equivocation::conditional_bits)
      .def_readonly("message_bits", &Equivocation::message_bits)
      .def("ratio", &Equivocation::ratio);

  py::class_<RateDesign>(m, "RateDesign")
      .def_readonly("total_rate", &RateDesign::total_rate)
      .def_readonly("secret_rate", &RateDesign::secret_rate);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("system", &ExperimentConfig::system)
      .def_readwrite("p_start", &ExperimentConfig::p_start)
      .def_readwrite("p_stop", &ExperimentConfig::p_stop)
      .def_readwrite("p_step", &ExperimentConfig::p_step)
      .def_readwrite("trials", &ExperimentConfig::trials)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("out", &ExperimentConfig::out)
      .def(py::self == py::self);

  // linear algebra kernel
  m.def("nullspace",
        [](const ComplexMatrix& a, double tol) {
          return nullspace(a, tol_of(tol));
        },
        py::arg("a"), py::arg("tol") = 1e-9);
  m.def("orth",
        [](const ComplexMatrix& a, double tol) { return orth(a, tol_of(tol)); },
        py::arg("a"), py::arg("tol") = 1e-9);
  m.def("intersect",
        [](const std::vector<ComplexMatrix>& bases, double tol) {
          return intersect(bases, tol_of(tol));
        },
        py::arg("bases"), py::arg("tol") = 1e-9);
  m.def("logdet_psd", &logdet_psd, py::arg("a"));
  m.def("solve",
        [](const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
          return solve(a, b, tol_of(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
  m.def("rank",
        [](const ComplexMatrix& a, double tol) {
          return static_cast<int>(rank(a, tol_of(tol)));
        },
        py::arg("a"), py::arg("tol") = 1e-9);
  m.def("complement", &complement, py::arg("q"));

  // scenario
  m.def("validate_config", &validate_config, py::arg("cfg"));
  m.def("classify_regime", &classify_regime, py::arg("cfg"));
  m.def("sample_channels", &sample_channels, py::arg("cfg"),
        py::arg("master_seed"), py::arg("trial"));

  // precoder synthesis
  m.def("nullspace_precoder",
        [](const ComplexMatrix& h, int streams, double tol) {
          return nullspace_precoder(h, streams, tol_of(tol));
        },
        py::arg("h"), py::arg("streams"), py::arg("tol") = 1e-9);
  m.def("plan_groups", &plan_groups, py::arg("cfg"));
  m.def("aligned_precoders",
        [](const ChannelSet& channels, GroupPlan plan, double tol) {
          auto jam = aligned_precoders(channels, plan, tol_of(tol));
          return py::make_tuple(jam, plan);
        },
        py::arg("channels"), py::arg("plan"), py::arg("tol") = 1e-9,
        "Returns (jam_precoders, plan_with_intersection_bases)");
  m.def("hybrid_precoders",
        [](const SystemConfig& cfg, const ChannelSet& channels, double tol) {
          return hybrid_precoders(cfg, channels, tol_of(tol));
        },
        py::arg("cfg"), py::arg("channels"), py::arg("tol") = 1e-9);
  m.def("ic_precoders",
        [](const ChannelSet& channels, double tol) {
          return ic_precoders(channels, tol_of(tol));
        },
        py::arg("channels"), py::arg("tol") = 1e-9);
  m.def("legitimate_precoders",
        [](const ChannelSet& channels, const std::vector<ComplexMatrix>& jam,
           const StreamAllocation& alloc, double tol) {
          return legitimate_precoders(channels, jam, alloc, tol_of(tol));
        },
        py::arg("channels"), py::arg("jam"), py::arg("alloc"),
        py::arg("tol") = 1e-9);
  m.def("receiver_zero_forcer",
        [](const ChannelSet& channels, const std::vector<ComplexMatrix>& jam,
           const std::vector<ComplexMatrix>& extra_kill, double tol,
           int receiver) {
          return receiver_zero_forcer(channels, jam, extra_kill, tol_of(tol),
                                      receiver);
        },
        py::arg("channels"), py::arg("jam"),
        py::arg("extra_kill") = std::vector<ComplexMatrix>{},
        py::arg("tol") = 1e-9, py::arg("receiver") = 0);
  m.def("build_precoder_set",
        [](const SystemConfig& cfg, const ChannelSet& channels, double tol) {
          return build_precoder_set(cfg, channels, tol_of(tol));
        },
        py::arg("cfg"), py::arg("channels"), py::arg("tol") = 1e-9);

  // bounds, rates and the sweep driver
  m.def("mac_upper_bound", &mac_upper_bound, py::arg("cfg"));
  m.def("ic_upper_bound", &ic_upper_bound, py::arg("tx_antennas"),
        py::arg("eve_antennas"));
  m.def("achievable_sdof", &achievable_sdof, py::arg("cfg"));
  m.def("sum_secrecy_rate", &sum_secrecy_rate, py::arg("channels"),
        py::arg("precoders"), py::arg("alloc"), py::arg("power"),
        py::arg("alpha"));
  m.def("sdof_slope", &sdof_slope, py::arg("curve"));
  m.def("sweep", &sweep, py::arg("cfg"), py::arg("policy"), py::arg("trials"),
        py::arg("seed"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

  // wiretap codes
  m.def("build_code", &build_code, py::arg("block_length"),
        py::arg("total_rate"), py::arg("secret_rate"), py::arg("input_dist"),
        py::arg("seed"));
  m.def("encode", &encode, py::arg("code"), py::arg("bin"), py::arg("seed"));
  m.def("decode", &decode, py::arg("code"), py::arg("received"),
        py::arg("channel"));
  m.def("equivocation", &equivocation, py::arg("code"), py::arg("eve"));
  m.def("mutual_information", &mutual_information, py::arg("channel"),
        py::arg("input_dist"));
  m.def("design_rates", &design_rates, py::arg("main"), py::arg("eve"),
        py::arg("input_dist"), py::arg("block_length"), py::arg("epsilon"));

  // config file tooling
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("print_config", &print_config, py::arg("cfg"));
  m.def("power_grid", &power_grid, py::arg("cfg"));
  m.def("render_csv", &render_csv, py::arg("curve"), py::arg("report"));
}
