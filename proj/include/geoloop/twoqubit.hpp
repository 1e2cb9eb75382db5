#pragma once

// Two NMR qubits a and b with J coupling. Qubit b is the control and is never
// flipped; qubit a carries the geometric loop. Every 4x4 matrix here uses the
// basis order |up up>, |down up>, |up down>, |down down> (qubit a written
// first and varying fastest), i.e. index = a + 2 b with up = 0, down = 1.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geoloop/core.hpp"

namespace geoloop {

struct NmrParams {
  double omega_a = 0.0;
  double omega_b = 0.0;
  double coupling_j = 0.0;
  /// Accessory-field frequency applied to qubit a, if any.
  std::optional<double> accessory;
};

enum class BState { up, down };

enum class ConditioningMode {
  /// Pulses on a act for both states of b; only the coupling is conditional.
  natural,
  /// Line-selective pulses: nothing acts on a while b is down.
  line_selective,
};

/// Single-qubit drive on qubit a.
struct PulseStep {
  ControlSegment segment;
  bool operator==(const PulseStep&) const = default;
};

/// Free evolution under the conditional effective Hamiltonian of qubit a.
struct CouplingStep {
  double duration = 0.0;
  bool operator==(const CouplingStep&) const = default;
};

using ConditionalStep = std::variant<PulseStep, CouplingStep>;

struct ConditionalSchedule {
  std::vector<ConditionalStep> steps;
  ConditioningMode mode = ConditioningMode::natural;
  /// sigma_z coefficients c of H_a = (c/2) sigma_z^a during coupling steps,
  /// for b up and b down.
  double field_up = 0.0;
  double field_down = 0.0;
  std::string label;

  bool operator==(const ConditionalSchedule&) const = default;
};

/// (omega_a Z.I + omega_b I.Z + pi J Z.Z) / 2 in the basis above.
Matrix4 nmr_hamiltonian(const NmrParams& p);

/// c in H_a = (c/2) sigma_z^a, c = omega_a - accessory +/- pi J (+ for b up).
/// Throws MissingAccessory when no accessory frequency is set.
double effective_field_a(const NmrParams& p, BState b_state);

/// The accessory frequency omega_a - pi J that turns the coupling into
/// H_a = pi J sigma_z for b up and H_a = 0 for b down.
double conditional_accessory(const NmrParams& p);

/// Pulse (y, omega, pi/(2 omega)), coupling 1/(2J), pulse (y, omega, pi/(2 omega)).
/// Coupling fields come from effective_field_a; when `p.accessory` is empty
/// the conditional choice omega_a - pi J is used. Throws InvalidCoupling for
/// J <= 0 and InvalidArgument for omega <= 0.
ConditionalSchedule two_qubit_schedule(double omega, const NmrParams& p, ConditioningMode mode);

/// The single-loop schedule on qubit a, line-selective, no coupling steps.
ConditionalSchedule controlled_u_schedule(double chi, double omega, double omega2);

/// Block-conditional propagator of a conditional schedule.
Unitary4 two_qubit_unitary(const ConditionalSchedule& sched);

/// The 2x2 evolution of qubit a for a fixed state of b.
Unitary2 conditional_block(const ConditionalSchedule& sched, BState b_state);

/// Runs the single-loop schedule on qubit a under line-selective conditioning:
/// u_chi(chi) on the b-up block, identity on the b-down block.
Unitary4 controlled_u(double chi, double omega, double omega2);

/// Places `up` on the b-up block and `down` on the b-down block.
Unitary4 block_diagonal(const Unitary2& up, const Unitary2& down);

/// Reference matrices for the conditional gates.
Unitary4 u2_natural_reference();
Unitary4 u2_line_selective_reference();
Unitary4 controlled_u_reference(double chi);

/// Rank of the operator-Schmidt decomposition across the a|b cut; 1 iff the
/// gate factorizes into single-qubit gates.
int operator_schmidt_rank(const Matrix4& u, double tol = 1e-10);

}  // namespace geoloop
