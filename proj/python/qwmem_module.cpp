#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qwmem/analysis.hpp"
#include "qwmem/core_math.hpp"
#include "qwmem/experiment.hpp"
#include "qwmem/memory_protocol.hpp"
#include "qwmem/schedule.hpp"
#include "qwmem/verify.hpp"
#include "qwmem/walk_engine.hpp"

namespace py = pybind11;
using namespace qwmem;

namespace {

std::string repr(const Qubit& q) {
    std::ostringstream os;
    os << "Qubit(alpha=" << q.alpha << ", beta=" << q.beta << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_qwmem, m) {
    m.doc() = "Discrete-time quantum walk used as a qubit memory";
    m.attr("__version__") = std::string(kToolVersion);

    py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_RuntimeError);
    py::register_exception<CollectedNormDeviation>(m, "CollectedNormDeviation", PyExc_RuntimeError);
    py::register_exception<EmptyCapture>(m, "EmptyCapture", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Qubit>(m, "Qubit")
        .def(py::init(&Qubit::from_amplitudes), py::arg("alpha"), py::arg("beta"))
        .def_static("normalized", &Qubit::normalized, py::arg("alpha"), py::arg("beta"))
        .def_static("from_angles", &Qubit::from_angles, py::arg("delta"), py::arg("eta"))
        .def_static("zero", &Qubit::zero)
        .def_static("one", &Qubit::one)
        .def_readonly("alpha", &Qubit::alpha)
        .def_readonly("beta", &Qubit::beta)
        .def("norm_squared", &Qubit::norm_squared)
        .def("__repr__", &repr);

    py::class_<Unitary2>(m, "Unitary2")
        .def_static("identity", &Unitary2::identity)
        .def("adjoint", &Unitary2::adjoint)
        .def("__matmul__", [](const Unitary2& a, const Unitary2& b) { return a * b; })
        .def("entries", &Unitary2::entries)
        .def("to_list", [](const Unitary2& u) {
            return std::vector<std::vector<Complex>>{{u.m00, u.m01}, {u.m10, u.m11}};
        });

    m.def("coin_matrix", &coin_matrix, py::arg("theta"));
    m.def("hadamard", &hadamard);
    m.def("sigma_x", &sigma_x);
    m.def("sigma_x_exponential", &sigma_x_exponential, py::arg("angle"));
    m.def("phase_diagonal", &phase_diagonal, py::arg("angle"));
    m.def("apply", &apply, py::arg("u"), py::arg("q"));
    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("max_abs_diff", py::overload_cast<const Qubit&, const Qubit&>(&max_abs_diff));
    m.def("max_abs_diff", py::overload_cast<const Unitary2&, const Unitary2&>(&max_abs_diff));
    m.def("is_unitary", &is_unitary, py::arg("u"), py::arg("tol") = kNormTolerance);

    py::enum_<ScheduleKind>(m, "ScheduleKind")
        .value("CONSTANT", ScheduleKind::Constant)
        .value("TEMPORAL_DISORDER", ScheduleKind::TemporalDisorder)
        .value("EXPLICIT", ScheduleKind::Explicit);

    py::class_<CoinSchedule>(m, "CoinSchedule")
        .def_static("constant", &CoinSchedule::constant, py::arg("theta"), py::arg("length"))
        .def_static("temporal_disorder", &CoinSchedule::temporal_disorder, py::arg("seed"),
                    py::arg("length"))
        .def_static("from_angles", &CoinSchedule::from_angles, py::arg("angles"))
        .def_property_readonly("kind", &CoinSchedule::kind)
        .def_property_readonly("angles", [](const CoinSchedule& s) {
            return std::vector<double>(s.angles().begin(), s.angles().end());
        })
        .def_property_readonly("theta_sum", &CoinSchedule::theta_sum)
        .def_property_readonly("seed", &CoinSchedule::seed)
        .def("__len__", &CoinSchedule::size);

    py::class_<WalkState>(m, "WalkState")
        .def_property_readonly("capacity", &WalkState::capacity)
        .def_property_readonly("steps_elapsed", &WalkState::steps_elapsed)
        .def("alpha", &WalkState::alpha, py::arg("j"))
        .def("beta", &WalkState::beta, py::arg("j"))
        .def("norm_squared", &WalkState::norm_squared);

    m.def("initial_state", &initial_state, py::arg("q"), py::arg("capacity"));
    m.def("step", &step, py::arg("state"), py::arg("theta"));
    m.def("evolve", py::overload_cast<const Qubit&, const CoinSchedule&>(&evolve), py::arg("q"),
          py::arg("schedule"));
    m.def("position_distribution", &position_distribution, py::arg("state"));

    py::enum_<Encoding>(m, "Encoding")
        .value("NONE", Encoding::None)
        .value("HADAMARD", Encoding::Hadamard);

    py::class_<MemoryConfig>(m, "MemoryConfig")
        .def(py::init([](CoinSchedule schedule, Encoding encoding, bool correction) {
                 return MemoryConfig{std::move(schedule), encoding, correction};
             }),
             py::arg("schedule"), py::arg("encoding") = Encoding::None,
             py::arg("phase_correction") = false)
        .def_readonly("schedule", &MemoryConfig::schedule)
        .def_readonly("encoding", &MemoryConfig::encoding)
        .def_readonly("phase_correction", &MemoryConfig::phase_correction);

    py::class_<RetrievalRecord>(m, "RetrievalRecord")
        .def_readonly("retrieved", &RetrievalRecord::retrieved)
        .def_readonly("final_state", &RetrievalRecord::final_state)
        .def_readonly("theta_sum", &RetrievalRecord::theta_sum)
        .def_readonly("fidelity_to_input", &RetrievalRecord::fidelity_to_input);

    m.def("collect", &collect, py::arg("state"));
    m.def("theorem1_prediction", &theorem1_prediction, py::arg("q"), py::arg("theta"),
          py::arg("steps"));
    m.def("theorem2_prediction", &theorem2_prediction, py::arg("q"), py::arg("theta_sum"));
    m.def("encode", &encode, py::arg("q"), py::arg("encoding"));
    m.def("decode", &decode, py::arg("collected"), py::arg("config"));
    m.def("store_retrieve", &store_retrieve, py::arg("q"), py::arg("config"));

    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("DELTA", SweepAxis::Delta)
        .value("ETA", SweepAxis::Eta);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("t", &SweepRow::t)
        .def_readonly("delta", &SweepRow::delta)
        .def_readonly("eta", &SweepRow::eta)
        .def_readonly("p0", &SweepRow::p0);

    m.def(
        "probability_sweep",
        [](double theta, std::vector<unsigned> steps, SweepAxis axis, std::vector<double> grid,
           double fixed) {
            return probability_sweep({theta, std::move(steps), axis, std::move(grid), fixed});
        },
        py::arg("theta"), py::arg("steps"), py::arg("axis"), py::arg("grid"), py::arg("fixed") = 0.0);

    py::class_<LocalizationReport>(m, "LocalizationReport")
        .def_readonly("mean_position", &LocalizationReport::mean_position)
        .def_readonly("std_dev", &LocalizationReport::std_dev)
        .def_readonly("participation_ratio", &LocalizationReport::participation_ratio)
        .def_readonly("window_capture", &LocalizationReport::window_capture)
        .def("capture", &LocalizationReport::capture, py::arg("w"));
    m.def("localization_report", &localization_report, py::arg("state"));

    py::class_<SiteWindow>(m, "SiteWindow")
        .def(py::init([](int lo, int hi) { return SiteWindow{lo, hi}; }), py::arg("lo"), py::arg("hi"))
        .def_static("centered", &SiteWindow::centered, py::arg("half_width"))
        .def_readonly("lo", &SiteWindow::lo)
        .def_readonly("hi", &SiteWindow::hi);

    py::class_<EavesdropperResult>(m, "EavesdropperResult")
        .def_readonly("captured_probability", &EavesdropperResult::captured_probability)
        .def_readonly("best_guess", &EavesdropperResult::best_guess)
        .def_readonly("decoded_guess", &EavesdropperResult::decoded_guess)
        .def_readonly("guess_fidelity", &EavesdropperResult::guess_fidelity);
    m.def("eavesdrop", &eavesdrop, py::arg("state"), py::arg("window"), py::arg("true_input"),
          py::arg("config"));

    py::class_<SampleStat>(m, "SampleStat")
        .def_readonly("mean", &SampleStat::mean)
        .def_readonly("std_error", &SampleStat::std_error);
    py::class_<SeedOutcome>(m, "SeedOutcome")
        .def_readonly("seed", &SeedOutcome::seed)
        .def_readonly("theta_sum", &SeedOutcome::theta_sum)
        .def_readonly("report", &SeedOutcome::report)
        .def_readonly("retrieval_fidelity", &SeedOutcome::retrieval_fidelity);
    py::class_<EnsembleAggregate>(m, "EnsembleAggregate")
        .def_readonly("std_dev", &EnsembleAggregate::std_dev)
        .def_readonly("participation_ratio", &EnsembleAggregate::participation_ratio)
        .def_readonly("retrieval_fidelity", &EnsembleAggregate::retrieval_fidelity)
        .def_readonly("mean_window_capture", &EnsembleAggregate::mean_window_capture);
    py::class_<EnsembleResult>(m, "EnsembleResult")
        .def_readonly("per_seed", &EnsembleResult::per_seed)
        .def_readonly("aggregate", &EnsembleResult::aggregate);
    m.def(
        "ensemble_stats",
        [](const Qubit& q, unsigned steps, const std::vector<std::uint64_t>& seeds, Encoding encoding,
           bool correction) {
            py::gil_scoped_release release;
            return ensemble_stats(q, steps, seeds, encoding, correction);
        },
        py::arg("q"), py::arg("steps"), py::arg("seeds"), py::arg("encoding") = Encoding::Hadamard,
        py::arg("phase_correction") = true);

    py::class_<VerifyCheck>(m, "VerifyCheck")
        .def_readonly("name", &VerifyCheck::name)
        .def_readonly("max_deviation", &VerifyCheck::max_deviation)
        .def_readonly("tolerance", &VerifyCheck::tolerance)
        .def_readonly("cases", &VerifyCheck::cases)
        .def("passed", &VerifyCheck::passed);
    m.def(
        "run_differential_suite",
        [](int cases) {
            py::gil_scoped_release release;
            return run_differential_suite(cases);
        },
        py::arg("disorder_cases") = 100);
}
