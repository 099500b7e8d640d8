#include "momentlab/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {
using Cx = std::complex<double>;
constexpr double kArcStep = std::numbers::pi / 8.0;  // max angular spacing of arc waypoints
}  // namespace

double TauPath::length() const {
  double s = 0.0;
  for (size_t i = 0; i + 1 < waypoints.size(); ++i) s += std::abs(waypoints[i + 1] - waypoints[i]);
  return s;
}

Cx TauPath::at(double s) const {
  if (s <= 0.0) return waypoints.front();
  for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
    double seg = std::abs(waypoints[i + 1] - waypoints[i]);
    if (s <= seg) {
      if (s == seg || seg == 0.0) return waypoints[i + 1];  // land on vertices exactly
      return waypoints[i] + (s / seg) * (waypoints[i + 1] - waypoints[i]);
    }
    s -= seg;
  }
  return waypoints.back();
}

TauPath TauPath::reversed() const {
  TauPath r = *this;
  std::reverse(r.waypoints.begin(), r.waypoints.end());
  return r;
}

double segment_distance(Cx a, Cx b, Cx p) {
  const Cx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * ab - p);
}

double polyline_min_distance(const std::vector<Cx>& waypoints, Cx p) {
  double best = std::numeric_limits<double>::infinity();
  if (waypoints.size() == 1) return std::abs(waypoints[0] - p);
  for (size_t i = 0; i + 1 < waypoints.size(); ++i)
    best = std::min(best, segment_distance(waypoints[i], waypoints[i + 1], p));
  return best;
}

TauPath make_path(std::vector<Cx> waypoints, double clearance, const std::vector<Cx>& obstacles) {
  if (waypoints.size() < 2) throw DomainError("path needs at least two waypoints");
  if (!(clearance > 0.0) || !std::isfinite(clearance))
    throw DomainError("path clearance must be positive and finite");
  for (Cx w : waypoints)
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw DomainError("path waypoint is not finite");
  for (Cx o : obstacles)
    if (polyline_min_distance(waypoints, o) < clearance * (1.0 - 1e-12))
      throw DomainError("path violates the clearance invariant");
  return TauPath{std::move(waypoints), clearance};
}

double default_clearance(const CriticalSet& s) {
  double gap = s.min_gap();
  double c = std::isfinite(gap) ? 0.1 * gap : 0.05 * (1.0 + s.max_modulus);
  return std::max(1e-3, c);
}

namespace {

struct Violation {
  size_t seg;      // index of the offending segment
  size_t obstacle; // index into the obstacle list
  double t_entry;  // entry parameter of the 2c-disc along the segment
};

// Intersection parameters of segment a+t(b-a) with the circle |z-o| = r;
// returns false when the line misses the circle.
bool circle_hits(Cx a, Cx b, Cx o, double r, double& t1, double& t2) {
  const Cx d = b - a;
  const Cx w = a - o;
  const double qa = std::norm(d);
  if (qa == 0.0) return false;
  const double qb = 2.0 * (w.real() * d.real() + w.imag() * d.imag());
  const double qc = std::norm(w) - r * r;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return false;
  const double sq = std::sqrt(disc);
  t1 = (-qb - sq) / (2.0 * qa);
  t2 = (-qb + sq) / (2.0 * qa);
  return true;
}

}  // namespace

TauPath plan_path(const std::vector<Cx>& obstacles, Cx tau_start, Cx tau_end, double clearance) {
  if (!(clearance > 0.0) || !std::isfinite(clearance))
    throw DomainError("plan_path: clearance must be positive and finite");
  for (Cx o : obstacles) {
    if (std::abs(tau_start - o) <= clearance)
      throw PathBlockedError("plan_path: start lies within clearance of an obstacle");
    if (std::abs(tau_end - o) <= clearance)
      throw PathBlockedError("plan_path: end lies within clearance of an obstacle");
  }

  const double r_detour = 2.0 * clearance;
  std::vector<Cx> wps{tau_start, tau_end};

  for (int pass = 0; pass < 64; ++pass) {
    // earliest violation along the polyline
    bool found = false;
    Violation v{0, 0, 0.0};
    for (size_t i = 0; i + 1 < wps.size() && !found; ++i) {
      double best_entry = std::numeric_limits<double>::infinity();
      for (size_t j = 0; j < obstacles.size(); ++j) {
        if (segment_distance(wps[i], wps[i + 1], obstacles[j]) >= clearance * (1.0 - 1e-9))
          continue;
        double t1 = 0.0, t2 = 0.0;
        if (!circle_hits(wps[i], wps[i + 1], obstacles[j], r_detour, t1, t2)) continue;
        if (t1 < best_entry) {
          best_entry = t1;
          v = {i, j, t1};
          found = true;
        }
      }
    }
    if (!found) {
      TauPath path{std::move(wps), clearance};
      return path;
    }

    const Cx a = wps[v.seg];
    const Cx b = wps[v.seg + 1];
    const Cx o = obstacles[v.obstacle];
    double t1 = 0.0, t2 = 0.0;
    circle_hits(a, b, o, r_detour, t1, t2);

    const bool a_inside = std::abs(a - o) < r_detour;
    const bool b_inside = std::abs(b - o) < r_detour;
    if ((a_inside && std::abs(a - o) < clearance) || (b_inside && std::abs(b - o) < clearance))
      throw PathBlockedError("plan_path: waypoint trapped inside an obstacle disc");

    double th_in, th_out;
    std::vector<Cx> repl;  // replaces the open interior of segment (a, b)
    if (!a_inside) {
      Cx p = a + t1 * (b - a);
      th_in = std::arg(p - o);
      repl.push_back(p);
    } else {
      th_in = std::arg(a - o);  // radial exit from a out to the detour circle
      repl.push_back(o + std::polar(r_detour, th_in));
    }
    if (!b_inside) {
      Cx q = a + t2 * (b - a);
      th_out = std::arg(q - o);
    } else {
      th_out = std::arg(b - o);  // radial entry from the detour circle down to b
    }

    // counterclockwise sweep from th_in to th_out
    double sweep = th_out - th_in;
    while (sweep <= 1e-9) sweep += 2.0 * std::numbers::pi;
    const int n_arc = std::max(1, static_cast<int>(std::ceil(sweep / kArcStep)));
    for (int k = 1; k < n_arc; ++k)
      repl.push_back(o + std::polar(r_detour, th_in + sweep * k / n_arc));
    repl.push_back(o + std::polar(r_detour, th_out));

    // splice, dropping points that coincide with the segment ends
    std::vector<Cx> next(wps.begin(), wps.begin() + v.seg + 1);
    for (Cx p : repl)
      if (std::abs(p - next.back()) > 1e-15 * (1.0 + std::abs(p))) next.push_back(p);
    if (std::abs(b - next.back()) > 1e-15 * (1.0 + std::abs(b)))
      next.push_back(b);
    else
      next.back() = b;
    next.insert(next.end(), wps.begin() + v.seg + 2, wps.end());
    wps = std::move(next);

    if (wps.size() > 20000) throw PathBlockedError("plan_path: waypoint budget exhausted");
  }
  throw PathBlockedError("plan_path: could not resolve all clearance violations");
}

TauPath plan_path(const CriticalSet& s, Cx tau_start, Cx tau_end, double clearance) {
  // Continuation must launch in the region where the series branch is the
  // analytic one: strictly outside the disc spanned by the critical set.
  if (std::abs(tau_start) <= s.max_modulus) {
    throw DomainError("path start must have modulus above the critical set's");
  }
  return plan_path(s.values(), tau_start, tau_end, clearance);
}

}  // namespace momentlab
