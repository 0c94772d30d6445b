#pragma once

#include <memory>
#include <vector>

namespace wqd {

enum class ProfileKind { Constant, Rectangular, Cosine };

// Time-varying acceleration a(tau) for linear motion, or angular velocity
// Omega(tau) for circular motion; the same three shapes serve both.
//
//   Constant:    value
//   Rectangular: +C on (tau1, tau2), -C on (tau2, 2 tau2 - tau1), 0 elsewhere
//   Cosine:      value * cos(omega_g tau)
struct MotionProfile {
  ProfileKind kind = ProfileKind::Constant;
  double value = 0.0;      // Constant level / Cosine amplitude
  double amplitude = 0.0;  // Rectangular C
  double tau1 = 0.0;
  double tau2 = 0.0;
  double omega_g = 0.0;

  static MotionProfile constant(double v);
  static MotionProfile rectangular(double c, double tau1, double tau2);
  static MotionProfile cosine(double amplitude, double omega_g);

  double operator()(double tau) const;
  double integral(double tau) const;  // int_0^tau, exact for all three kinds
  double max_abs() const;
  std::vector<double> breakpoints() const;
};

// Relativistic trajectory of one Majorana mode, parameterized by its proper
// time (natural units, c = 1). Immutable after construction; the prefix
// tables for the numerically-integrated families are built up front over
// [0, tau_table_max], so instances are safe for concurrent reads.
class Worldline {
 public:
  enum class Family { Static, ConstVelocity, ConstAccel, GenericLinear, Circular };

  struct Point {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
  };

  static Worldline make_static(int spatial_dim = 1);
  static Worldline make_const_velocity(double v);
  static Worldline make_const_accel(double a);
  static Worldline make_generic_linear(const MotionProfile& accel,
                                       double tau_table_max = 50.0);
  // phase_offset pi places the second mode diametrically opposite
  static Worldline make_circular(double r0, const MotionProfile& angular,
                                 double phase_offset = 0.0,
                                 double tau_table_max = 50.0);

  Family family() const { return family_; }
  int spatial_dim() const { return dim_; }

  Point position(double tau) const;
  double coord_time(double tau) const;
  double lapse(double tau) const;  // dt/dtau >= 1
  double proper_time_of_coord(double t) const;

  // linear families: rapidity eta(tau) = int_0^tau a, exact
  double rapidity(double tau) const;
  // light-cone coordinates of the trajectory point: branch 0 is t - x,
  // branch 1 is t + x; both are strictly increasing in tau
  double lightcone(double tau, int branch) const;
  double lightcone_rate(double tau, int branch) const;  // d/dtau = exp(-+eta)

  // circular family
  double angle(double tau) const;  // Theta(tau), includes the phase offset
  double angular_velocity(double tau) const;
  double gamma_factor(double tau) const;
  double radius() const { return r0_; }
  double phase_offset() const { return phase_; }

  double velocity() const { return v_; }       // ConstVelocity
  double acceleration() const { return a_; }   // ConstAccel
  const MotionProfile& profile() const { return profile_; }

  std::vector<double> breakpoints() const;
  double table_max() const { return table_max_; }

 private:
  struct Segment;
  Worldline() = default;
  void build_linear_table();
  void build_circular_table();
  const Segment& segment_at(double tau) const;
  double table_prefix(const std::vector<double>& prefix, double tau, int what) const;

  Family family_ = Family::Static;
  int dim_ = 1;
  double v_ = 0.0;
  double a_ = 0.0;
  double r0_ = 1.0;
  double phase_ = 0.0;
  MotionProfile profile_;
  bool exact_segments_ = false;  // piecewise closed form (Constant/Rectangular)

  // segment table for piecewise-exact families
  struct Segment {
    double tau_begin;
    double slope;     // a or Omega on the segment
    double eta0;      // rapidity at segment start (linear)
    double t0, x0;    // coordinates at segment start
    double theta0;    // angle at segment start (circular)
  };
  std::vector<Segment> segments_;

  // fine prefix tables for the Cosine profiles
  double table_max_ = 0.0;
  double table_step_ = 0.0;
  std::vector<double> pref_t_, pref_x_, pref_theta_;
};

}  // namespace wqd
