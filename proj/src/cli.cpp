#include "geoloop/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "geoloop/gates.hpp"
#include "geoloop/noise.hpp"
#include "geoloop/phases.hpp"
#include "geoloop/schedule_io.hpp"
#include "geoloop/twoqubit.hpp"

namespace geoloop::cli {
namespace {

// Raised for anything that maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end || !std::isfinite(value)) {
    throw InputError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

Schedule single_qubit(const ScheduleDocument& doc) {
  if (const auto* s = std::get_if<Schedule>(&doc)) return *s;
  throw InputError("this command requires a single_qubit schedule");
}

ScheduleDocument load(const std::string& path) {
  try {
    return load_schedule(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string fixed12(double v) {
  std::ostringstream os;
  // Avoid printing "-0.000000000000" for round-off residue.
  if (std::abs(v) < 5e-13) v = 0.0;
  os << std::fixed << std::setprecision(12) << v;
  return os.str();
}

std::string full(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct SynthesizeArgs {
  std::string chi = "0";
  double omega = 1.0;
  double omega2 = 1.0;
  std::string out;
  std::string two_qubit;
  double coupling_j = 1.0;
  bool controlled = false;
};

int cmd_synthesize(const SynthesizeArgs& a, std::ostream& out) {
  ScheduleDocument doc;
  if (!a.two_qubit.empty()) {
    ConditioningMode mode;
    if (a.two_qubit == "natural") {
      mode = ConditioningMode::natural;
    } else if (a.two_qubit == "line_selective") {
      mode = ConditioningMode::line_selective;
    } else {
      throw InputError("--two-qubit must be 'natural' or 'line_selective'");
    }
    NmrParams p;
    p.coupling_j = a.coupling_j;
    doc = two_qubit_schedule(a.omega, p, mode);
  } else if (a.controlled) {
    doc = controlled_u_schedule(parse_angle(a.chi), a.omega, a.omega2);
  } else {
    doc = single_loop_schedule(parse_angle(a.chi), a.omega, a.omega2);
  }
  try {
    save_schedule(a.out, doc);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  out << "wrote " << a.out << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& target_text, std::ostream& out) {
  const ScheduleDocument doc = load(path);
  const auto target = parse_target(target_text);
  Eigen::MatrixXcd actual;
  if (const auto* s = std::get_if<Schedule>(&doc)) {
    actual = schedule_unitary(*s).matrix();
  } else {
    actual = two_qubit_unitary(std::get<ConditionalSchedule>(doc)).matrix();
  }
  const Eigen::MatrixXcd expected =
      std::visit([](const auto& u) { return Eigen::MatrixXcd(u.matrix()); }, target);
  GateReport r;
  try {
    r = compare_gates(actual, expected);
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
  const bool pass = r.max_entry_deviation <= kVerifyThreshold;
  out << "target: " << target_text << "\n"
      << "max_entry_deviation: " << std::setprecision(6) << std::scientific << r.max_entry_deviation << "\n"
      << std::defaultfloat << "trace_fidelity: " << full(r.trace_fidelity) << "\n"
      << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitFail;
}

int cmd_phase(const std::string& path, const std::string& chi, const std::string& phi, std::ostream& out,
              std::ostream& err) {
  const Schedule sched = single_qubit(load(path));
  const QubitState initial = state_from_angles(parse_angle(chi), parse_angle(phi), Branch::plus);
  if (!is_cyclic(sched, initial, kCyclicTol)) {
    err << "error: initial state not cyclic\n";
    return kExitFail;
  }
  const PhaseDecomposition d = geometric_phase(sched, initial);
  out << "total: " << fixed12(d.total) << "\n"
      << "dynamical: " << fixed12(d.dynamical) << "\n"
      << "geometric: " << fixed12(d.geometric) << "\n";
  return kExitOk;
}

int cmd_export_path(const std::string& path, const std::string& chi, const std::string& phi, int samples,
                    const std::string& out_path, std::ostream& out) {
  const Schedule sched = single_qubit(load(path));
  const QubitState initial = state_from_angles(parse_angle(chi), parse_angle(phi), Branch::plus);
  if (samples < 2) throw InputError("--samples must be >= 2");
  const BlochPath bloch = sample_path(sched, initial, samples);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + out_path + "' for writing");
  file << "t,x,y,z\n";
  for (const auto& s : bloch.samples) {
    file << full(s.time) << ',' << full(s.point.x) << ',' << full(s.point.y) << ',' << full(s.point.z) << '\n';
  }
  if (!file.flush()) throw InputError("failed writing '" + out_path + "'");
  out << "wrote " << bloch.samples.size() << " samples to " << out_path << "\n";
  return kExitOk;
}

int cmd_noise(const std::string& path, const std::string& target_text, const NoiseSpec& spec, std::ostream& out) {
  const Schedule sched = single_qubit(load(path));
  const auto target = parse_target(target_text);
  const auto* u = std::get_if<Unitary2>(&target);
  if (!u) throw InputError("noise requires a single-qubit target");
  const SweepResult r = fidelity_sweep(sched, *u, spec);
  out << "trial,fidelity\n";
  for (std::size_t k = 0; k < r.fidelities.size(); ++k) out << k << ',' << full(r.fidelities[k]) << '\n';
  out << "mean," << full(r.mean) << '\n' << "min," << full(r.min) << '\n' << "std," << full(r.std) << '\n';
  return kExitOk;
}

}  // namespace

double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_number(text);

  double factor = 1.0;
  std::string head = text.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    factor = parse_number(head);
  }
  double divisor = 1.0;
  const std::string tail = text.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw InputError("bad angle: '" + raw + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) throw InputError("bad angle: '" + raw + "'");
  }
  return factor * kPi / divisor;
}

std::variant<Unitary2, Unitary4> parse_target(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "u_chi" && colon != std::string::npos) return u_chi(parse_angle(arg));
  if (name == "controlled_u" && colon != std::string::npos) {
    const double chi = parse_angle(arg);
    if (!(chi >= 0.0 && chi <= kPi / 2.0)) throw InputError("chi out of range for controlled_u");
    return controlled_u_reference(chi);
  }
  if (colon == std::string::npos && name == "u2") return u2_natural_reference();
  if (colon == std::string::npos && name == "u2_prime") return u2_line_selective_reference();
  throw InputError("unknown target '" + text + "' (expected u_chi:<chi>, u2, u2_prime, controlled_u:<chi>)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-loop nonadiabatic geometric gate simulator", "geoloop"};
  app.require_subcommand(1);

  SynthesizeArgs syn;
  auto* synthesize = app.add_subcommand("synthesize", "Write the single-loop schedule for a polar angle chi");
  synthesize->add_option("--chi", syn.chi, "Polar angle in [0, pi/2] (radians or pi literal)");
  synthesize->add_option("--omega", syn.omega, "z-field angular frequency")->capture_default_str();
  synthesize->add_option("--omega2", syn.omega2, "transverse-field angular frequency")->capture_default_str();
  synthesize->add_option("--out,-o", syn.out, "Output schedule file")->required();
  synthesize->add_option("--two-qubit", syn.two_qubit,
                         "Write the three-step conditional sequence instead (natural | line_selective)");
  synthesize->add_option("--coupling-j", syn.coupling_j, "J coupling for --two-qubit")->capture_default_str();
  synthesize->add_flag("--controlled", syn.controlled, "Write the controlled-U(chi) two-qubit schedule");

  std::string schedule_path, target, chi = "0", phi = "0", out_path;
  int samples = 100;
  NoiseSpec spec;

  auto* verify = app.add_subcommand("verify", "Compare a schedule's propagator against a named gate");
  verify->add_option("schedule", schedule_path, "Schedule file")->required();
  verify->add_option("--target,-t", target, "u_chi:<chi> | u2 | u2_prime | controlled_u:<chi>")->required();

  auto* phase = app.add_subcommand("phase", "Total, dynamical and geometric phase of a cyclic state");
  phase->add_option("schedule", schedule_path, "Schedule file")->required();
  phase->add_option("--chi", chi, "Initial polar angle")->capture_default_str();
  phase->add_option("--phi", phi, "Initial azimuth")->capture_default_str();

  auto* export_path = app.add_subcommand("export-path", "Write the sampled Bloch path as CSV");
  export_path->add_option("schedule", schedule_path, "Schedule file")->required();
  export_path->add_option("--chi", chi, "Initial polar angle")->capture_default_str();
  export_path->add_option("--phi", phi, "Initial azimuth")->capture_default_str();
  export_path->add_option("--samples", samples, "Samples per segment (>= 2)")->capture_default_str();
  export_path->add_option("--out,-o", out_path, "Output CSV file")->required();

  auto* noise = app.add_subcommand("noise", "Monte Carlo control-error fidelity sweep");
  noise->add_option("schedule", schedule_path, "Schedule file")->required();
  noise->add_option("--target,-t", target, "Single-qubit target, e.g. u_chi:pi/4")->required();
  noise->add_option("--sigma-omega", spec.sigma_omega, "Relative std-dev of omega")->capture_default_str();
  noise->add_option("--sigma-tau", spec.sigma_tau, "Relative std-dev of durations")->capture_default_str();
  noise->add_option("--trials", spec.trials, "Number of trials")->capture_default_str();
  noise->add_option("--seed", spec.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*synthesize) return cmd_synthesize(syn, out);
    if (*verify) return cmd_verify(schedule_path, target, out);
    if (*phase) return cmd_phase(schedule_path, chi, phi, out, err);
    if (*export_path) return cmd_export_path(schedule_path, chi, phi, samples, out_path, out);
    if (*noise) return cmd_noise(schedule_path, target, spec, out);
  } catch (const NonCyclic& e) {
    err << "error: initial state not cyclic\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace geoloop::cli
