#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geoloop/gates.hpp"
#include "geoloop/phases.hpp"
#include "oracles.hpp"

namespace geoloop {
namespace {

constexpr double kTol = 1e-12;

std::vector<oracle::Segment> to_oracle(const Schedule& s) {
  std::vector<oracle::Segment> out;
  for (const auto& seg : s.segments) out.push_back({seg.axis, seg.omega, seg.duration});
  return out;
}

double mod2pi_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

QubitState plus_state(double chi) { return state_from_angles(chi, 0.0, Branch::plus); }

TEST(IsCyclic, EmptyScheduleAlwaysCyclic) {
  EXPECT_TRUE(is_cyclic(Schedule{}, state_from_angles(0.3, 0.2, Branch::plus), 1e-12));
}

TEST(IsCyclic, LoopPlusStateIsCyclic) {
  for (double chi : {0.0, 0.4, kPi / 3, kPi / 2}) {
    EXPECT_TRUE(is_cyclic(single_loop_schedule(chi, 1.0, 1.0), plus_state(chi), 1e-9));
  }
}

TEST(IsCyclic, UpIsNotCyclicForChiPiOverThree) {
  const Schedule s = single_loop_schedule(kPi / 3, 1.0, 1.0);
  // Oracle: |<up|U|up>| = 0.5 from the series propagator.
  const double overlap = std::abs(oracle::schedule_propagator(to_oracle(s))(0, 0));
  EXPECT_NEAR(overlap, 0.5, 1e-12);
  EXPECT_LT(overlap, 1.0 - 1e-3);
  EXPECT_FALSE(is_cyclic(s, QubitState::up(), 1e-9));
  EXPECT_THROW(is_cyclic(s, QubitState::up(), 0.0), InvalidArgument);
}

TEST(TotalPhase, LoopGivesMinusHalfPi) {
  for (double chi : {0.0, 0.2, kPi / 4, kPi / 2}) {
    EXPECT_NEAR(total_phase(single_loop_schedule(chi, 1.4, 0.6), plus_state(chi)), -kPi / 2, kTol);
  }
}

TEST(TotalPhase, MinusBranchGivesPlusHalfPi) {
  const double chi = 0.8;
  const QubitState minus = state_from_angles(chi, 0.0, Branch::minus);
  EXPECT_NEAR(total_phase(single_loop_schedule(chi, 1.0, 1.0), minus), kPi / 2, kTol);
}

TEST(TotalPhase, EmptyAndNonCyclic) {
  EXPECT_NEAR(total_phase(Schedule{}, plus_state(1.0)), 0.0, kTol);
  EXPECT_THROW(total_phase(single_loop_schedule(kPi / 3, 1.0, 1.0), QubitState::up()), NonCyclic);
}

TEST(DynamicalPhase, FirstSegmentMatchesQuadrature) {
  const double omega = 1.3;
  for (double chi : {0.0, 0.5, kPi / 4, 1.3}) {
    Schedule s;
    s.segments = {single_loop_schedule(chi, omega, 1.0).segments.front()};
    const double exact = dynamical_phase(s, plus_state(chi));
    EXPECT_NEAR(exact, -(kPi / 4) * std::cos(chi), kTol);
    const double quad = oracle::quadrature_dynamical_phase(to_oracle(s), plus_state(chi).amplitudes(), 10000);
    EXPECT_NEAR(exact, quad, 1e-8);
  }
}

TEST(DynamicalPhase, FullLoopCancels) {
  for (double chi : {0.0, 0.3, kPi / 3, kPi / 2}) {
    EXPECT_NEAR(dynamical_phase(single_loop_schedule(chi, 2.0, 0.5), plus_state(chi)), 0.0, kTol);
  }
}

TEST(DynamicalPhase, XRotationOfYZPlaneStateIsZero) {
  Schedule s;
  s.segments = {{Vector3::UnitX(), 1.7, 2.2}};
  const QubitState yz = state_from_angles(0.9, kPi / 2, Branch::plus);  // Bloch vector in y-z plane
  EXPECT_NEAR(dynamical_phase(s, yz), 0.0, kTol);
}

TEST(DynamicalPhase, MatchesQuadratureOnRandomSchedules) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_real_distribution<double> omega(0.1, 3.0), tau(0.0, 2.0), ang(0.0, kPi);
  for (int k = 0; k < 20; ++k) {
    Schedule s;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) s.segments.push_back({oracle::random_unit(rng), omega(rng), tau(rng)});
    const QubitState in = state_from_angles(ang(rng), 2 * ang(rng), Branch::plus);
    const double quad = oracle::quadrature_dynamical_phase(to_oracle(s), in.amplitudes(), 10000);
    EXPECT_NEAR(dynamical_phase(s, in), quad, 1e-8);
  }
}

TEST(DynamicalPhase, GeodesicSegmentsContributeNothing) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> omega(0.1, 5.0), tau(0.0, 4.0);
  for (int k = 0; k < 200; ++k) {
    const Vector3 axis = oracle::random_unit(rng);
    Vector3 r = axis.cross(oracle::random_unit(rng)).normalized();
    // State whose Bloch vector is r.
    const double chi = std::acos(std::clamp(r.z(), -1.0, 1.0));
    const double phi = std::atan2(r.y(), r.x());
    Schedule s;
    s.segments = {{axis, omega(rng), tau(rng)}};
    EXPECT_NEAR(dynamical_phase(s, state_from_angles(chi, phi, Branch::plus)), 0.0, kTol);
  }
}

TEST(GeometricPhase, LoopIsPurelyGeometric) {
  const PhaseDecomposition d = geometric_phase(single_loop_schedule(kPi / 4, 1.0, 1.0), plus_state(kPi / 4));
  EXPECT_NEAR(d.total, -kPi / 2, kTol);
  EXPECT_NEAR(d.dynamical, 0.0, kTol);
  EXPECT_NEAR(d.geometric, -kPi / 2, kTol);
}

TEST(GeometricPhase, EmptySchedule) {
  const PhaseDecomposition d = geometric_phase(Schedule{}, plus_state(0.4));
  EXPECT_NEAR(d.total, 0.0, kTol);
  EXPECT_NEAR(d.dynamical, 0.0, kTol);
  EXPECT_NEAR(d.geometric, 0.0, kTol);
}

TEST(GeometricPhase, StationaryStateHasNoGeometricPart) {
  Schedule s;
  s.segments = {{Vector3::UnitZ(), 1.0, kPi / 2}};
  const PhaseDecomposition d = geometric_phase(s, QubitState::up());
  EXPECT_NEAR(d.total, -kPi / 4, kTol);
  EXPECT_NEAR(d.dynamical, -kPi / 4, kTol);
  EXPECT_NEAR(d.geometric, 0.0, kTol);
}

TEST(GeometricPhase, DecompositionIdentityAndGauge) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0.0, kPi / 2), w(0.2, 4.0), g(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const double chi = ang(rng);
    const Schedule s = single_loop_schedule(chi, w(rng), w(rng));
    // Any state is cyclic under a rotation about its own Bloch axis; mix in
    // such segments to move the phases off the trivial values.
    Schedule t;
    const QubitState in = state_from_angles(2 * ang(rng), 2 * g(rng), Branch::plus);
    t.segments = {{bloch_vector(in).vec().normalized(), w(rng), w(rng)}};
    for (const Schedule* sched : std::initializer_list<const Schedule*>{&s, &t}) {
      const QubitState start = sched == &s ? plus_state(chi) : in;
      const PhaseDecomposition d = geometric_phase(*sched, start);
      EXPECT_LE(mod2pi_distance(d.total, d.dynamical + d.geometric), 1e-9);
      const PhaseDecomposition e = geometric_phase(*sched, start.with_global_phase(g(rng)));
      EXPECT_NEAR(d.total, e.total, kTol);
      EXPECT_NEAR(d.dynamical, e.dynamical, kTol);
      EXPECT_NEAR(d.geometric, e.geometric, kTol);
    }
  }
}

TEST(SamplePath, LoopStartsAndEndsAtA) {
  const double chi = 0.7;
  const BlochPath p = sample_path(single_loop_schedule(chi, 1.0, 1.0), plus_state(chi), 50);
  const Vector3 a(std::sin(chi), 0.0, std::cos(chi));
  EXPECT_LE((p.samples.front().point.vec() - a).norm(), 1e-9);
  EXPECT_LE((p.samples.back().point.vec() - a).norm(), 1e-9);
  EXPECT_EQ(p.samples.size(), 1u + 4u * 49u);
  for (std::size_t i = 1; i < p.samples.size(); ++i) {
    EXPECT_GT(p.samples[i].time, p.samples[i - 1].time);
    EXPECT_NEAR(p.samples[i].point.vec().norm(), 1.0, 1e-9);
  }
}

TEST(SamplePath, SecondSegmentStaysInYZPlane) {
  const double chi = 1.0;
  const int n = 40;
  const BlochPath p = sample_path(single_loop_schedule(chi, 1.0, 1.0), plus_state(chi), n);
  for (int k = n - 1; k <= 2 * (n - 1); ++k) EXPECT_NEAR(p.samples[k].point.x, 0.0, kTol);
}

TEST(SamplePath, ZeroDurationSegmentsSkippedAndEmptySchedule) {
  const BlochPath p = sample_path(single_loop_schedule(kPi / 2, 1.0, 1.0), plus_state(kPi / 2), 2);
  EXPECT_EQ(p.samples.size(), 4u);  // fourth segment has zero duration
  const BlochPath empty = sample_path(Schedule{}, plus_state(0.3), 5);
  ASSERT_EQ(empty.samples.size(), 1u);
  EXPECT_EQ(empty.samples[0].time, 0.0);
  EXPECT_THROW(sample_path(Schedule{}, plus_state(0.3), 1), InvalidArgument);
}

BlochPath latitude_circle(double polar, int n, bool counterclockwise) {
  BlochPath p;
  for (int k = 0; k <= n; ++k) {
    const double az = (counterclockwise ? 1.0 : -1.0) * 2 * kPi * k / n;
    p.samples.push_back({static_cast<double>(k),
                         {std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar)}});
  }
  return p;
}

TEST(SolidAngle, PolarCapOracle) {
  for (double polar : {0.2, 0.9, kPi / 2 - 0.1}) {
    const double cap = 2 * kPi * (1 - std::cos(polar));
    EXPECT_NEAR(solid_angle(latitude_circle(polar, 20000, true)), cap, 1e-6);
    EXPECT_NEAR(solid_angle(latitude_circle(polar, 20000, false)), -cap, 1e-6);
  }
}

TEST(SolidAngle, QuarterHemisphereLoop) {
  const BlochPath p = sample_path(single_loop_schedule(kPi / 2, 1.0, 1.0), plus_state(kPi / 2), 10000);
  EXPECT_NEAR(solid_angle(p), kPi, 1e-4);
  BlochPath reversed = p;
  std::reverse(reversed.samples.begin(), reversed.samples.end());
  EXPECT_NEAR(solid_angle(reversed), -kPi, 1e-4);
}

TEST(SolidAngle, DegenerateAndOpenPaths) {
  BlochPath two;
  two.samples = {{0.0, {0, 0, 1}}, {1.0, {0, 0, 1}}};
  EXPECT_EQ(solid_angle(two), 0.0);
  BlochPath open;
  open.samples = {{0.0, {0, 0, 1}}, {1.0, {1, 0, 0}}};
  EXPECT_THROW(solid_angle(open), OpenPath);
}

TEST(SolidAngle, AharonovAnandanRelationAcrossChi) {
  for (int k = 0; k <= 10; ++k) {
    const double chi = (kPi / 2) * k / 10;
    const Schedule s = single_loop_schedule(chi, 1.0, 1.0);
    const double omega_area = solid_angle(sample_path(s, plus_state(chi), 10000));
    const PhaseDecomposition d = geometric_phase(s, plus_state(chi));
    EXPECT_LE(mod2pi_distance(d.geometric, -omega_area / 2), 1e-4) << "chi=" << chi;
  }
}

}  // namespace
}  // namespace geoloop
