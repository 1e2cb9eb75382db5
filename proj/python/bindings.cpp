#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "geoloop/gates.hpp"
#include "geoloop/noise.hpp"
#include "geoloop/phases.hpp"
#include "geoloop/schedule_io.hpp"
#include "geoloop/twoqubit.hpp"

namespace py = pybind11;
using namespace geoloop;

namespace {

Vector3 axis_from(const std::vector<double>& v) {
  if (v.size() != 3) throw InvalidArgument("axis must have three components");
  return {v[0], v[1], v[2]};
}

}  // namespace

PYBIND11_MODULE(_geoloop, m) {
  m.doc() = "Single-loop nonadiabatic geometric gates: propagators, phases and gate checks";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<NonCyclic>(m, "NonCyclic", base.ptr());
  py::register_exception<OpenPath>(m, "OpenPath", base.ptr());
  py::register_exception<ChiOutOfRange>(m, "ChiOutOfRange", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<MissingAccessory>(m, "MissingAccessory", base.ptr());
  py::register_exception<InvalidCoupling>(m, "InvalidCoupling", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::enum_<Branch>(m, "Branch").value("plus", Branch::plus).value("minus", Branch::minus);
  py::enum_<BState>(m, "BState").value("up", BState::up).value("down", BState::down);
  py::enum_<ConditioningMode>(m, "ConditioningMode")
      .value("natural", ConditioningMode::natural)
      .value("line_selective", ConditioningMode::line_selective);

  py::class_<QubitState>(m, "QubitState")
      .def(py::init<Complex, Complex>(), py::arg("amp_up"), py::arg("amp_down"))
      .def_property_readonly("amp_up", &QubitState::amp_up)
      .def_property_readonly("amp_down", &QubitState::amp_down)
      .def_property_readonly("amplitudes", [](const QubitState& s) { return Eigen::Vector2cd(s.amplitudes()); })
      .def("inner", &QubitState::inner)
      .def("__repr__", [](const QubitState& s) {
        return "QubitState(" + py::repr(py::cast(s.amp_up())).cast<std::string>() + ", " +
               py::repr(py::cast(s.amp_down())).cast<std::string>() + ")";
      });

  py::class_<ControlSegment>(m, "ControlSegment")
      .def(py::init([](const std::vector<double>& axis, double omega, double duration) {
             return ControlSegment{axis_from(axis), omega, duration};
           }),
           py::arg("axis"), py::arg("omega"), py::arg("duration"))
      .def_property(
          "axis", [](const ControlSegment& s) { return Eigen::Vector3d(s.axis); },
          [](ControlSegment& s, const std::vector<double>& v) { s.axis = axis_from(v); })
      .def_readwrite("omega", &ControlSegment::omega)
      .def_readwrite("duration", &ControlSegment::duration)
      .def("__eq__", &ControlSegment::operator==);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def(py::init([](std::vector<ControlSegment> segs, std::string label) {
             return Schedule{std::move(segs), std::move(label)};
           }),
           py::arg("segments"), py::arg("label") = "")
      .def_readwrite("segments", &Schedule::segments)
      .def_readwrite("label", &Schedule::label)
      .def_property_readonly("total_duration", &Schedule::total_duration)
      .def("__eq__", &Schedule::operator==);

  py::class_<PhaseDecomposition>(m, "PhaseDecomposition")
      .def_readonly("total", &PhaseDecomposition::total)
      .def_readonly("dynamical", &PhaseDecomposition::dynamical)
      .def_readonly("geometric", &PhaseDecomposition::geometric);

  py::class_<GateReport>(m, "GateReport")
      .def_readonly("max_entry_deviation", &GateReport::max_entry_deviation)
      .def_readonly("trace_fidelity", &GateReport::trace_fidelity)
      .def_readonly("unitarity_defect", &GateReport::unitarity_defect);

  py::class_<NmrParams>(m, "NmrParams")
      .def(py::init([](double wa, double wb, double j, std::optional<double> acc) {
             return NmrParams{wa, wb, j, acc};
           }),
           py::arg("omega_a") = 0.0, py::arg("omega_b") = 0.0, py::arg("coupling_j") = 0.0,
           py::arg("accessory") = std::nullopt)
      .def_readwrite("omega_a", &NmrParams::omega_a)
      .def_readwrite("omega_b", &NmrParams::omega_b)
      .def_readwrite("coupling_j", &NmrParams::coupling_j)
      .def_readwrite("accessory", &NmrParams::accessory);

  py::class_<ConditionalSchedule>(m, "ConditionalSchedule")
      .def_readonly("mode", &ConditionalSchedule::mode)
      .def_readonly("field_up", &ConditionalSchedule::field_up)
      .def_readonly("field_down", &ConditionalSchedule::field_down)
      .def_readonly("label", &ConditionalSchedule::label)
      .def_property_readonly("num_steps", [](const ConditionalSchedule& s) { return s.steps.size(); });

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init([](double so, double st, int trials, std::uint64_t seed) {
             return NoiseSpec{so, st, trials, seed};
           }),
           py::arg("sigma_omega") = 0.0, py::arg("sigma_tau") = 0.0, py::arg("trials") = 1, py::arg("seed") = 0)
      .def_readwrite("sigma_omega", &NoiseSpec::sigma_omega)
      .def_readwrite("sigma_tau", &NoiseSpec::sigma_tau)
      .def_readwrite("trials", &NoiseSpec::trials)
      .def_readwrite("seed", &NoiseSpec::seed);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("fidelities", &SweepResult::fidelities)
      .def_readonly("mean", &SweepResult::mean)
      .def_readonly("min", &SweepResult::min)
      .def_readonly("std", &SweepResult::std);

  // Matrices cross the boundary as numpy complex arrays.
  auto u2 = [](const Unitary2& u) { return Matrix2(u.matrix()); };
  auto u4 = [](const Unitary4& u) { return Matrix4(u.matrix()); };

  m.def("state_from_angles", &state_from_angles, py::arg("chi"), py::arg("phi"), py::arg("branch") = Branch::plus);
  m.def("bloch_vector", [](const QubitState& s) { return bloch_vector(s).vec(); });
  m.def("segment_unitary", [u2](const ControlSegment& s) { return u2(segment_unitary(s)); });
  m.def("schedule_unitary", [u2](const Schedule& s) { return u2(schedule_unitary(s)); });
  m.def("propagate", &propagate, py::arg("schedule"), py::arg("initial"));

  m.def("is_cyclic", &is_cyclic, py::arg("schedule"), py::arg("initial"), py::arg("tol") = kCyclicTol);
  m.def("total_phase", &total_phase);
  m.def("dynamical_phase", &dynamical_phase);
  m.def("dynamical_phase_terms", &dynamical_phase_terms);
  m.def("geometric_phase", &geometric_phase);
  m.def(
      "sample_path",
      [](const Schedule& s, const QubitState& in, int n) {
        const BlochPath p = sample_path(s, in, n);
        Eigen::MatrixX4d out(static_cast<Eigen::Index>(p.samples.size()), 4);
        for (std::size_t k = 0; k < p.samples.size(); ++k) {
          const auto& q = p.samples[k];
          out.row(static_cast<Eigen::Index>(k)) << q.time, q.point.x, q.point.y, q.point.z;
        }
        return out;
      },
      py::arg("schedule"), py::arg("initial"), py::arg("samples_per_segment"),
      "Rows of (t, x, y, z).");
  m.def(
      "solid_angle",
      [](const Eigen::MatrixXd& rows) {
        if (rows.cols() != 3 && rows.cols() != 4) throw InvalidArgument("expected rows of (x,y,z) or (t,x,y,z)");
        const Eigen::Index off = rows.cols() - 3;
        BlochPath p;
        for (Eigen::Index k = 0; k < rows.rows(); ++k) {
          p.samples.push_back({static_cast<double>(k), {rows(k, off), rows(k, off + 1), rows(k, off + 2)}});
        }
        return solid_angle(p);
      },
      py::arg("path"));

  m.def("u_gate", [u2](double g, double c, double p) { return u2(u_gate(g, c, p)); }, py::arg("gamma"),
        py::arg("chi"), py::arg("phi"));
  m.def("u_chi", [u2](double c) { return u2(u_chi(c)); }, py::arg("chi"));
  m.def("single_loop_schedule", &single_loop_schedule, py::arg("chi"), py::arg("omega") = 1.0,
        py::arg("omega2") = 1.0);
  m.def(
      "compare_gates",
      [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return compare_gates(a, b); }, py::arg("u"),
      py::arg("v"));
  m.def(
      "commutator_norm",
      [](const Matrix2& a, const Matrix2& b) { return commutator_norm(Unitary2(a), Unitary2(b)); });

  m.def("nmr_hamiltonian", &nmr_hamiltonian);
  m.def("effective_field_a", &effective_field_a);
  m.def("two_qubit_schedule", &two_qubit_schedule, py::arg("omega"), py::arg("params"),
        py::arg("mode") = ConditioningMode::natural);
  m.def("two_qubit_unitary", [u4](const ConditionalSchedule& s) { return u4(two_qubit_unitary(s)); });
  m.def("controlled_u", [u4](double c, double w, double w2) { return u4(controlled_u(c, w, w2)); },
        py::arg("chi"), py::arg("omega") = 1.0, py::arg("omega2") = 1.0);
  m.def("operator_schmidt_rank", &operator_schmidt_rank, py::arg("u"), py::arg("tol") = 1e-10);

  m.def("perturb_schedule", &perturb_schedule);
  m.def(
      "fidelity_sweep",
      [](const Schedule& s, const Matrix2& target, const NoiseSpec& spec) {
        return fidelity_sweep(s, Unitary2(target), spec);
      },
      py::arg("schedule"), py::arg("target"), py::arg("spec"));

  m.def("load_schedule", &load_schedule);
  m.def("parse_schedule", [](const std::string& text) { return parse_schedule(text); });
  m.def("serialize", [](const ScheduleDocument& d) { return serialize(d); });
  m.def("save_schedule", &save_schedule);
}
