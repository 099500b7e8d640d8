#pragma once

#include <complex>
#include <vector>

#include "momentlab/spectrum.hpp"

namespace momentlab {

// A piecewise-linear path in the τ-plane. `clearance` is the guaranteed
// minimum distance from every point of the polyline to every obstacle the
// path was planned against.
struct TauPath {
  std::vector<std::complex<double>> waypoints;
  double clearance = 0.0;

  double length() const;
  // Point at arclength s from the start, clamped to [0, length()].
  std::complex<double> at(double s) const;
  std::complex<double> start() const { return waypoints.front(); }
  std::complex<double> end() const { return waypoints.back(); }
  TauPath reversed() const;
};

// Distance from point p to the segment [a, b].
double segment_distance(std::complex<double> a, std::complex<double> b,
                        std::complex<double> p);

// Minimum distance from the polyline to p.
double polyline_min_distance(const std::vector<std::complex<double>>& waypoints,
                             std::complex<double> p);

// Validating constructor for hand-built paths: at least two waypoints,
// positive clearance, and (when obstacles are given) the clearance invariant.
TauPath make_path(std::vector<std::complex<double>> waypoints, double clearance,
                  const std::vector<std::complex<double>>& obstacles = {});

// Planner default: a tenth of the smallest gap between obstacles, with an
// absolute floor of 1e-3.
double default_clearance(const CriticalSet& s);

// Straight segment from tau_start to tau_end; wherever it would pass within
// `clearance` of an obstacle, a counterclockwise arc of radius 2·clearance
// around the obstacle is spliced in. Throws PathBlockedError when an endpoint
// sits within clearance of an obstacle or no clean route is found.
TauPath plan_path(const std::vector<std::complex<double>>& obstacles,
                  std::complex<double> tau_start, std::complex<double> tau_end,
                  double clearance);
// Same, planned against a critical set; additionally requires the start to
// lie strictly outside the disc |tau| <= max_modulus (the launch region where
// the principal branch is the analytic one).
TauPath plan_path(const CriticalSet& s, std::complex<double> tau_start,
                  std::complex<double> tau_end, double clearance);

}  // namespace momentlab
