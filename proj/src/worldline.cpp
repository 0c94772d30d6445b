#include "wqd/worldline.hpp"

#include <algorithm>
#include <cmath>

#include "wqd/errors.hpp"

namespace wqd {

namespace {
constexpr double kFineStep = 5e-4;  // prefix-table resolution
constexpr double kGl2Node = 0.57735026918962576451;  // 1/sqrt(3)
}  // namespace

// ---------------------------------------------------------------------------
// MotionProfile

MotionProfile MotionProfile::constant(double v) {
  MotionProfile p;
  p.kind = ProfileKind::Constant;
  p.value = v;
  return p;
}

MotionProfile MotionProfile::rectangular(double c, double tau1, double tau2) {
  if (!(0.0 <= tau1 && tau1 < tau2)) {
    throw DomainError("MotionProfile: rectangular window needs 0 <= tau1 < tau2");
  }
  MotionProfile p;
  p.kind = ProfileKind::Rectangular;
  p.amplitude = c;
  p.tau1 = tau1;
  p.tau2 = tau2;
  return p;
}

MotionProfile MotionProfile::cosine(double amplitude, double omega_g) {
  MotionProfile p;
  p.kind = ProfileKind::Cosine;
  p.value = amplitude;
  p.omega_g = omega_g;
  return p;
}

double MotionProfile::operator()(double tau) const {
  switch (kind) {
    case ProfileKind::Constant:
      return value;
    case ProfileKind::Rectangular:
      if (tau > tau1 && tau <= tau2) return amplitude;
      if (tau > tau2 && tau <= 2.0 * tau2 - tau1) return -amplitude;
      return 0.0;
    case ProfileKind::Cosine:
      return value * std::cos(omega_g * tau);
  }
  return 0.0;
}

double MotionProfile::integral(double tau) const {
  switch (kind) {
    case ProfileKind::Constant:
      return value * tau;
    case ProfileKind::Rectangular: {
      const double up = std::clamp(tau, tau1, tau2) - tau1;
      const double down = std::clamp(tau, tau2, 2.0 * tau2 - tau1) - tau2;
      return amplitude * (up - down);
    }
    case ProfileKind::Cosine:
      if (omega_g == 0.0) return value * tau;
      return value / omega_g * std::sin(omega_g * tau);
  }
  return 0.0;
}

double MotionProfile::max_abs() const {
  switch (kind) {
    case ProfileKind::Constant:
      return std::abs(value);
    case ProfileKind::Rectangular:
      return std::abs(amplitude);
    case ProfileKind::Cosine:
      return std::abs(value);
  }
  return 0.0;
}

std::vector<double> MotionProfile::breakpoints() const {
  if (kind == ProfileKind::Rectangular) {
    return {tau1, tau2, 2.0 * tau2 - tau1};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Worldline factories

Worldline Worldline::make_static(int spatial_dim) {
  if (spatial_dim != 1 && spatial_dim != 2) {
    throw DomainError("Worldline: spatial dimension must be 1 or 2");
  }
  Worldline w;
  w.family_ = Family::Static;
  w.dim_ = spatial_dim;
  w.table_max_ = 1e300;
  return w;
}

Worldline Worldline::make_const_velocity(double v) {
  if (!(std::abs(v) < 1.0)) {
    throw DomainError("Worldline: |v| must be < 1");
  }
  Worldline w;
  w.family_ = Family::ConstVelocity;
  w.v_ = v;
  w.table_max_ = 1e300;
  return w;
}

Worldline Worldline::make_const_accel(double a) {
  if (a == 0.0) throw DomainError("Worldline: constant acceleration must be nonzero");
  Worldline w;
  w.family_ = Family::ConstAccel;
  w.a_ = a;
  w.table_max_ = 1e300;
  return w;
}

Worldline Worldline::make_generic_linear(const MotionProfile& accel,
                                         double tau_table_max) {
  Worldline w;
  w.family_ = Family::GenericLinear;
  w.profile_ = accel;
  w.table_max_ = tau_table_max * 1.05;
  w.exact_segments_ = accel.kind != ProfileKind::Cosine;
  if (w.exact_segments_) {
    // rapidity is piecewise linear: integrate cosh/sinh segment by segment
    std::vector<double> bp = accel.breakpoints();
    bp.insert(bp.begin(), 0.0);
    double t0 = 0.0, x0 = 0.0;
    for (std::size_t i = 0; i < bp.size(); ++i) {
      Segment s;
      s.tau_begin = bp[i];
      s.eta0 = accel.integral(bp[i]);
      s.slope = accel(0.5 * (bp[i] + (i + 1 < bp.size() ? bp[i + 1] : bp[i] + 1.0)));
      s.t0 = t0;
      s.x0 = x0;
      s.theta0 = 0.0;
      w.segments_.push_back(s);
      if (i + 1 < bp.size()) {
        const double d = bp[i + 1] - bp[i];
        if (s.slope != 0.0) {
          t0 += (std::sinh(s.eta0 + s.slope * d) - std::sinh(s.eta0)) / s.slope;
          x0 += (std::cosh(s.eta0 + s.slope * d) - std::cosh(s.eta0)) / s.slope;
        } else {
          t0 += std::cosh(s.eta0) * d;
          x0 += std::sinh(s.eta0) * d;
        }
      }
    }
  } else {
    w.build_linear_table();
  }
  return w;
}

Worldline Worldline::make_circular(double r0, const MotionProfile& angular,
                                   double phase_offset, double tau_table_max) {
  if (!(r0 > 0.0)) throw DomainError("Worldline: circular radius must be positive");
  if (!(r0 * angular.max_abs() < 1.0 - 1e-12)) {
    throw DomainError("Worldline: r0*Omega must stay below 1 (superluminal)");
  }
  Worldline w;
  w.family_ = Family::Circular;
  w.dim_ = 2;
  w.r0_ = r0;
  w.phase_ = phase_offset;
  w.profile_ = angular;
  w.table_max_ = tau_table_max * 1.05;
  w.exact_segments_ = angular.kind != ProfileKind::Cosine;
  if (w.exact_segments_) {
    // Omega piecewise constant: t and Theta are piecewise linear
    std::vector<double> bp = angular.breakpoints();
    bp.insert(bp.begin(), 0.0);
    double t0 = 0.0, th0 = phase_offset;
    for (std::size_t i = 0; i < bp.size(); ++i) {
      Segment s;
      s.tau_begin = bp[i];
      s.slope = angular(0.5 * (bp[i] + (i + 1 < bp.size() ? bp[i + 1] : bp[i] + 1.0)));
      s.eta0 = 0.0;
      s.t0 = t0;
      s.x0 = 0.0;
      s.theta0 = th0;
      w.segments_.push_back(s);
      if (i + 1 < bp.size()) {
        const double d = bp[i + 1] - bp[i];
        const double g = 1.0 / std::sqrt(1.0 - r0 * r0 * s.slope * s.slope);
        t0 += g * d;
        th0 += g * s.slope * d;
      }
    }
  } else {
    w.build_circular_table();
  }
  return w;
}

// ---------------------------------------------------------------------------
// prefix tables (Cosine profiles): two-point Gauss per fine cell

void Worldline::build_linear_table() {
  table_step_ = kFineStep;
  const std::size_t n = static_cast<std::size_t>(std::ceil(table_max_ / table_step_)) + 1;
  pref_t_.assign(n, 0.0);
  pref_x_.assign(n, 0.0);
  double ct = 0.0, cx = 0.0;  // compensation terms
  for (std::size_t j = 1; j < n; ++j) {
    const double a = (j - 1) * table_step_;
    const double h = table_step_;
    const double m = a + 0.5 * h;
    const double n1 = m - 0.5 * h * kGl2Node;
    const double n2 = m + 0.5 * h * kGl2Node;
    const double e1 = profile_.integral(n1);
    const double e2 = profile_.integral(n2);
    const double dt = 0.5 * h * (std::cosh(e1) + std::cosh(e2));
    const double dx = 0.5 * h * (std::sinh(e1) + std::sinh(e2));
    double y = dt - ct;
    double tt = pref_t_[j - 1] + y;
    ct = (tt - pref_t_[j - 1]) - y;
    pref_t_[j] = tt;
    y = dx - cx;
    tt = pref_x_[j - 1] + y;
    cx = (tt - pref_x_[j - 1]) - y;
    pref_x_[j] = tt;
  }
}

void Worldline::build_circular_table() {
  table_step_ = kFineStep;
  const std::size_t n = static_cast<std::size_t>(std::ceil(table_max_ / table_step_)) + 1;
  pref_t_.assign(n, 0.0);
  pref_theta_.assign(n, 0.0);
  pref_theta_[0] = phase_;
  for (std::size_t j = 1; j < n; ++j) {
    const double a = (j - 1) * table_step_;
    const double h = table_step_;
    const double m = a + 0.5 * h;
    double dt = 0.0, dth = 0.0;
    for (int s = -1; s <= 1; s += 2) {
      const double tau = m + s * 0.5 * h * kGl2Node;
      const double om = profile_(tau);
      const double g = 1.0 / std::sqrt(1.0 - r0_ * r0_ * om * om);
      dt += 0.5 * h * g;
      dth += 0.5 * h * g * om;
    }
    pref_t_[j] = pref_t_[j - 1] + dt;
    pref_theta_[j] = pref_theta_[j - 1] + dth;
  }
}

const Worldline::Segment& Worldline::segment_at(double tau) const {
  std::size_t i = segments_.size() - 1;
  while (i > 0 && segments_[i].tau_begin > tau) --i;
  return segments_[i];
}

double Worldline::table_prefix(const std::vector<double>& prefix, double tau,
                               int what) const {
  if (tau < 0.0 || tau > table_max_ + 1e-9) {
    throw DomainError("Worldline: proper time outside the prefix table range");
  }
  const std::size_t j = std::min(
      static_cast<std::size_t>(tau / table_step_), prefix.size() - 1);
  const double a = j * table_step_;
  const double h = tau - a;
  double val = prefix[j];
  if (h > 0.0) {
    const double m = a + 0.5 * h;
    for (int s = -1; s <= 1; s += 2) {
      const double u = m + s * 0.5 * h * kGl2Node;
      double f = 0.0;
      if (family_ == Family::GenericLinear) {
        const double e = profile_.integral(u);
        f = (what == 0) ? std::cosh(e) : std::sinh(e);
      } else {
        const double om = profile_(u);
        const double g = 1.0 / std::sqrt(1.0 - r0_ * r0_ * om * om);
        f = (what == 0) ? g : g * om;
      }
      val += 0.5 * h * f;
    }
  }
  return val;
}

// ---------------------------------------------------------------------------
// queries

double Worldline::rapidity(double tau) const {
  switch (family_) {
    case Family::Static:
      return 0.0;
    case Family::ConstVelocity:
      return std::atanh(v_);
    case Family::ConstAccel:
      return a_ * tau;
    case Family::GenericLinear:
      return profile_.integral(tau);
    case Family::Circular:
      throw DomainError("Worldline: rapidity is a linear-motion quantity");
  }
  return 0.0;
}

double Worldline::coord_time(double tau) const {
  switch (family_) {
    case Family::Static:
      return tau;
    case Family::ConstVelocity:
      return tau / std::sqrt(1.0 - v_ * v_);
    case Family::ConstAccel:
      return std::sinh(a_ * tau) / a_;
    case Family::GenericLinear:
      if (exact_segments_) {
        const Segment& s = segment_at(tau);
        const double d = tau - s.tau_begin;
        if (s.slope != 0.0) {
          return s.t0 + (std::sinh(s.eta0 + s.slope * d) - std::sinh(s.eta0)) / s.slope;
        }
        return s.t0 + std::cosh(s.eta0) * d;
      }
      return table_prefix(pref_t_, tau, 0);
    case Family::Circular:
      if (exact_segments_) {
        const Segment& s = segment_at(tau);
        const double g = 1.0 / std::sqrt(1.0 - r0_ * r0_ * s.slope * s.slope);
        return s.t0 + g * (tau - s.tau_begin);
      }
      return table_prefix(pref_t_, tau, 0);
  }
  return tau;
}

Worldline::Point Worldline::position(double tau) const {
  Point p;
  p.t = coord_time(tau);
  switch (family_) {
    case Family::Static:
      break;
    case Family::ConstVelocity:
      p.x = v_ * tau / std::sqrt(1.0 - v_ * v_);
      break;
    case Family::ConstAccel:
      p.x = (std::cosh(a_ * tau) - 1.0) / a_;
      break;
    case Family::GenericLinear:
      if (exact_segments_) {
        const Segment& s = segment_at(tau);
        const double d = tau - s.tau_begin;
        if (s.slope != 0.0) {
          p.x = s.x0 + (std::cosh(s.eta0 + s.slope * d) - std::cosh(s.eta0)) / s.slope;
        } else {
          p.x = s.x0 + std::sinh(s.eta0) * d;
        }
      } else {
        p.x = table_prefix(pref_x_, tau, 1);
      }
      break;
    case Family::Circular: {
      const double th = angle(tau);
      p.x = r0_ * std::cos(th);
      p.y = r0_ * std::sin(th);
      break;
    }
  }
  return p;
}

double Worldline::angle(double tau) const {
  if (family_ != Family::Circular) {
    throw DomainError("Worldline: angle is a circular-motion quantity");
  }
  if (exact_segments_) {
    const Segment& s = segment_at(tau);
    const double g = 1.0 / std::sqrt(1.0 - r0_ * r0_ * s.slope * s.slope);
    return s.theta0 + g * s.slope * (tau - s.tau_begin);
  }
  return table_prefix(pref_theta_, tau, 1);
}

double Worldline::angular_velocity(double tau) const {
  if (family_ != Family::Circular) {
    throw DomainError("Worldline: angular velocity is a circular-motion quantity");
  }
  return profile_(tau);
}

double Worldline::gamma_factor(double tau) const {
  if (family_ == Family::Circular) {
    const double om = profile_(tau);
    return 1.0 / std::sqrt(1.0 - r0_ * r0_ * om * om);
  }
  if (family_ == Family::ConstVelocity) return 1.0 / std::sqrt(1.0 - v_ * v_);
  return lapse(tau);
}

double Worldline::lapse(double tau) const {
  switch (family_) {
    case Family::Static:
      return 1.0;
    case Family::ConstVelocity:
      return 1.0 / std::sqrt(1.0 - v_ * v_);
    case Family::ConstAccel:
      return std::cosh(a_ * tau);
    case Family::GenericLinear:
      return std::cosh(profile_.integral(tau));
    case Family::Circular:
      return gamma_factor(tau);
  }
  return 1.0;
}

double Worldline::lightcone(double tau, int branch) const {
  const double sign = (branch == 0) ? -1.0 : 1.0;
  switch (family_) {
    case Family::Static:
      return tau;
    case Family::ConstVelocity: {
      const double eta = std::atanh(v_);
      return std::exp(sign * eta) * tau;
    }
    case Family::ConstAccel:
      // t -+ x = (1 - e^{-a tau})/a and (e^{a tau} - 1)/a
      return std::expm1(sign * a_ * tau) / (sign * a_);
    case Family::GenericLinear: {
      const Point p = position(tau);
      return (branch == 0) ? p.t - p.x : p.t + p.x;
    }
    case Family::Circular:
      throw DomainError("Worldline: light-cone coordinates are 1d quantities");
  }
  return tau;
}

double Worldline::lightcone_rate(double tau, int branch) const {
  const double sign = (branch == 0) ? -1.0 : 1.0;
  switch (family_) {
    case Family::Static:
      return 1.0;
    case Family::ConstVelocity:
      return std::exp(sign * std::atanh(v_));
    case Family::ConstAccel:
      return std::exp(sign * a_ * tau);
    case Family::GenericLinear:
      return std::exp(sign * profile_.integral(tau));
    case Family::Circular:
      throw DomainError("Worldline: light-cone coordinates are 1d quantities");
  }
  return 1.0;
}

double Worldline::proper_time_of_coord(double t) const {
  if (t < 0.0) throw DomainError("Worldline: coordinate time must be >= 0");
  switch (family_) {
    case Family::Static:
      return t;
    case Family::ConstVelocity:
      return t * std::sqrt(1.0 - v_ * v_);
    case Family::ConstAccel:
      return std::asinh(a_ * t) / a_;
    default:
      break;
  }
  // bracketed bisection on the monotone t(tau)
  double lo = 0.0, hi = std::min(t + 1.0, table_max_);
  while (coord_time(hi) < t) {
    lo = hi;
    hi = std::min(hi * 2.0, table_max_);
    if (hi >= table_max_ && coord_time(hi) < t) {
      throw DomainError("Worldline: coordinate time beyond the table range");
    }
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (coord_time(mid) < t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> Worldline::breakpoints() const {
  if (family_ == Family::GenericLinear || family_ == Family::Circular) {
    return profile_.breakpoints();
  }
  return {};
}

}  // namespace wqd
