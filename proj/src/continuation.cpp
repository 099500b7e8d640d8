#include "momentlab/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {

using Cx = std::complex<double>;

double coeff_abs(const ComplexRational& c) { return std::exp(log_abs(c)); }

// Σ|a_k| — bounds |f| on [0,1].
double coeff_sum(const Polynomial& f) {
  double b = 0.0;
  for (int k = 0; k <= f.degree(); ++k) b += coeff_abs(f.coeff(k));
  return b;
}

}  // namespace

double anchor_radius(const Polynomial& f, const CriticalSet& s) {
  // Σ|a_k|·2^k bounds |f| on |z| ≤ 2; beyond it every root of f(z)=τ has |z|>2.
  double b2 = 0.0;
  for (int k = 0; k <= f.degree(); ++k) b2 += coeff_abs(f.coeff(k)) * std::ldexp(1.0, k);
  return std::max(2.0 * s.max_modulus + 1.0, 1.25 * b2 + 1.0);
}

FValue f_series(const Polynomial& f, const MomentSequence& seq, Cx t, double margin) {
  if (!(seq.poly == f)) throw DomainError("f_series: sequence was computed for another polynomial");
  if (t == Cx(0.0, 0.0)) return {t, Cx(1.0, 0.0), FMethod::Series, 0.0};

  const double m = sup_norm(f).value;
  const double q = std::abs(t) * m;
  if (q >= 1.0 - margin)
    throw DomainError("f_series: |t|·M(f) too close to 1 for the guaranteed disc");

  const double log_t = std::log(std::abs(t));
  const double arg_t = std::arg(t);
  Cx sum = 0.0;
  for (int n = 0; n <= seq.n_max(); ++n) {
    const ComplexRational& mn = seq.at(n);
    if (mn.is_zero()) continue;
    const double mag = std::exp(n * log_t + log_abs(mn));
    sum += std::polar(mag, n * arg_t + arg(mn));
  }
  const double tail = std::pow(q, seq.n_max() + 1) / (1.0 - q);
  return {t, sum, FMethod::Series, tail};
}

FValue f_series(const Polynomial& f, Cx t, int n_max, double margin) {
  return f_series(f, moment_sequence(f, n_max), t, margin);
}

namespace {

// Gauss-Kronrod 7-15 panel. Abscissae/weights are the standard QUADPACK
// constants for [-1, 1]; Gauss nodes sit at the odd Kronrod indices.
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct Panel {
  double a, b;
  Cx integral;
  double err;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

}  // namespace

FValue f_quadrature(const Polynomial& f, Cx t, const CriticalSet& s, double rel_tol) {
  if (t == Cx(0.0, 0.0) || f.is_zero()) return {t, Cx(1.0, 0.0), FMethod::Quadrature, 0.0};

  const Cx tau = 1.0 / t;
  for (const CriticalPoint& e : s.elements)
    if (std::abs(tau - e.value) <= std::max(e.radius, 1e-12 * (1.0 + s.max_modulus)))
      throw DomainError("f_quadrature: 1/t lies in the singular set");

  // pole precondition: no real root of f(x) - 1/t in [0,1]
  if (f.degree() >= 1) {
    std::vector<Cx> h = f.coeffs_double();
    h[0] -= tau;
    for (Cx z : polyroots_double(h))
      if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real())) && z.real() >= -1e-9 &&
          z.real() <= 1.0 + 1e-9)
        throw PoleOnContourError("f_quadrature: integrand has a pole on [0,1]");
  }

  const std::vector<Cx> cs = f.coeffs_double();
  const double den_floor = 1e-13 * (1.0 + std::abs(t) * (1.0 + coeff_sum(f)));
  auto integrand = [&](double x) {
    Cx fx = cs.back();
    for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k) fx = fx * x + cs[k];
    Cx den = 1.0 - t * fx;
    if (std::abs(den) < den_floor)
      throw PoleOnContourError("f_quadrature: integrand blow-up on [0,1]");
    return 1.0 / den;
  };

  auto panel = [&](double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Cx ik = kWgk[7] * integrand(mid);
    Cx ig = kWg[3] * integrand(mid);
    for (int i = 0; i < 7; ++i) {
      const double dx = half * kXgk[i];
      const Cx pair = integrand(mid - dx) + integrand(mid + dx);
      ik += kWgk[i] * pair;
      if (i % 2 == 1) ig += kWg[i / 2] * pair;
    }
    return Panel{a, b, ik * half, std::abs((ik - ig) * half)};
  };

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  Panel first = panel(0.0, 1.0);
  Cx total = first.integral;
  double err = first.err;
  queue.push(first);
  int n_panels = 1;
  while (err > rel_tol * std::max(std::abs(total), 1e-30) && n_panels < 4000) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.integral;
    err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    for (Panel half : {panel(worst.a, mid), panel(mid, worst.b)}) {
      total += half.integral;
      err += half.err;
      queue.push(half);
    }
    ++n_panels;
  }
  return {t, total, FMethod::Quadrature, std::max(err, 0.0)};
}

FValue f_partial_fraction(const Polynomial& f, const RootBundle& bundle) {
  const int d = f.degree();
  if (d < 1) throw DomainError("f_partial_fraction: polynomial must have degree >= 1");
  if (bundle.roots.size() != static_cast<size_t>(d) || bundle.logs.size() != bundle.roots.size())
    throw DomainError("f_partial_fraction: bundle does not match the polynomial degree");
  if (std::abs(bundle.tau) == 0.0)
    throw DomainError("f_partial_fraction: tau = 0 has no finite t");

  double zmax = 0.0, gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < bundle.roots.size(); ++i) {
    zmax = std::max(zmax, std::abs(bundle.roots[i]));
    for (size_t j = i + 1; j < bundle.roots.size(); ++j)
      gap = std::min(gap, std::abs(bundle.roots[i] - bundle.roots[j]));
  }
  if (d >= 2 && gap < 1e-9 * (1.0 + zmax))
    throw CoincidentRootsError("f_partial_fraction: roots too close for the residue products");

  const Cx a_d = f.leading().to_complex();
  const Polynomial fp = derivative(f);

  Cx sum = 0.0;
  double err = 0.0;
  std::vector<Cx> c(d);
  for (int k = 0; k < d; ++k) {
    Cx prod = 1.0;
    for (int l = 0; l < d; ++l)
      if (l != k) prod /= bundle.roots[k] - bundle.roots[l];
    c[k] = prod;
    sum += prod * bundle.logs[k];
  }
  const Cx scale = -bundle.tau / a_d;  // = -1/(a_d t)
  const Cx value = scale * sum;

  // residual-based first-order error propagation through logs and products
  for (int k = 0; k < d; ++k) {
    const Cx zk = bundle.roots[k];
    const double fpz = std::abs(fp.eval(zk));
    const double resid = std::abs(f.eval(zk) - bundle.tau);
    const double eps_k = fpz > 0.0 ? resid / fpz : std::sqrt(resid);
    double sens = std::abs(c[k]) * (1.0 / std::max(std::abs(1.0 - zk), 1e-300) +
                                    1.0 / std::max(std::abs(zk), 1e-300));
    for (int l = 0; l < d; ++l)
      if (l != k)
        sens += (std::abs(c[k] * bundle.logs[k]) + std::abs(c[l] * bundle.logs[l])) /
                std::abs(zk - bundle.roots[l]);
    err += eps_k * sens;
  }
  err = std::abs(scale) * err + 1e-15 * static_cast<double>(d) * std::abs(value);

  return {1.0 / bundle.tau, value, FMethod::PartialFraction, err};
}

namespace {

// Target must keep a positive margin to the obstacle list.
double target_distance(const std::vector<Cx>& obstacles, Cx tau) {
  double d = std::numeric_limits<double>::infinity();
  for (Cx o : obstacles) d = std::min(d, std::abs(tau - o));
  return d;
}

}  // namespace

FValue evaluate_pf(const Polynomial& f, Cx t, const CriticalSet& s, double clearance) {
  if (f.degree() < 1)
    throw DomainError("evaluate_pf: degree >= 1 required (use series/quadrature for constants)");
  if (t == Cx(0.0, 0.0))
    throw DomainError("evaluate_pf: t = 0 is the series anchor point, not a tracking target");

  const Cx tau = 1.0 / t;
  const Cx u = tau / std::abs(tau);
  const std::vector<Cx> obstacles = s.values();

  const double dist_target = target_distance(obstacles, tau);
  if (dist_target <= 1e-12 * (1.0 + s.max_modulus))
    throw DomainError("evaluate_pf: 1/t lies in the singular set");

  const double r_anchor = anchor_radius(f, s);
  const double r_mid = 2.0 * s.max_modulus + 1.0;

  RootBundle bundle = initial_bundle(f, r_anchor * u);
  if (std::abs(tau) >= r_mid) {
    const double c_far = 0.45 * (std::min(r_anchor, std::abs(tau)) - s.max_modulus);
    TauPath leg = plan_path(obstacles, r_anchor * u, tau, c_far);
    bundle = track_roots(f, leg, bundle).back();
  } else {
    const double c_far = 0.45 * (s.max_modulus + 1.0);
    TauPath leg_a = plan_path(obstacles, r_anchor * u, r_mid * u, c_far);
    bundle = track_roots(f, leg_a, bundle).back();
    double c_near = clearance > 0.0 ? clearance : default_clearance(s);
    c_near = std::min(c_near, 0.5 * dist_target);
    TauPath leg_b = plan_path(obstacles, r_mid * u, tau, c_near);
    bundle = track_roots(f, leg_b, bundle).back();
  }
  return f_partial_fraction(f, bundle);
}

std::vector<DecayRow> decay_probe(const Polynomial& f, Cx direction,
                                  const std::vector<double>& t_magnitudes) {
  const int d = f.degree();
  if (d < 1) throw DomainError("decay_probe: degree >= 1 required");
  if (std::abs(direction) == 0.0) throw DomainError("decay_probe: zero direction");
  for (size_t i = 0; i < t_magnitudes.size(); ++i) {
    if (!(t_magnitudes[i] > 0.0)) throw DomainError("decay_probe: magnitudes must be positive");
    if (i > 0 && t_magnitudes[i] <= t_magnitudes[i - 1])
      throw DomainError("decay_probe: magnitudes must be increasing");
  }

  const Cx u = direction / std::abs(direction);
  const Cx u_tau = std::conj(u);  // τ = 1/t moves along the conjugate ray
  const CriticalSet s = critical_set(f);
  const double zero_tol = 1e-12 * (1.0 + s.max_modulus);
  std::vector<Cx> obstacles;  // τ → 0 is exempt: the probes approach it
  for (Cx v : s.values())
    if (std::abs(v) > zero_tol) obstacles.push_back(v);
  const double c0 = default_clearance(s);

  Cx prev = anchor_radius(f, s) * u_tau;
  RootBundle bundle = initial_bundle(f, prev);

  std::vector<DecayRow> rows;
  rows.reserve(t_magnitudes.size());
  for (double mag : t_magnitudes) {
    const Cx tau_j = u_tau / mag;
    double c_j = std::min(c0, 0.45 * std::abs(tau_j));
    const double dist = target_distance(obstacles, tau_j);
    if (dist <= 2.0 * zero_tol)
      throw DomainError("decay_probe: the ray meets the singular set; pick another direction");
    c_j = std::min(c_j, 0.9 * dist);

    TauPath leg = plan_path(obstacles, prev, tau_j, c_j);
    bundle = track_roots(f, leg, bundle).back();
    const FValue fv = f_partial_fraction(f, bundle);

    const double f_abs = std::abs(fv.value);
    const double scaled = f_abs * std::pow(mag, 1.0 / d) / std::max(1.0, std::log(mag));
    rows.push_back({mag, f_abs, scaled});
    prev = tau_j;
  }
  return rows;
}

TauPath plan_shrink_path(const Polynomial& f, const CriticalSet& s, Cx direction,
                         double tau_min) {
  if (!(tau_min > 0.0)) throw DomainError("plan_shrink_path: tau_min must be positive");
  if (std::abs(direction) == 0.0) throw DomainError("plan_shrink_path: zero direction");
  const Cx u = direction / std::abs(direction);

  const double zero_tol = 1e-12 * (1.0 + s.max_modulus);
  std::vector<Cx> obstacles;
  for (Cx v : s.values())
    if (std::abs(v) > zero_tol) obstacles.push_back(v);

  // The origin is exempt, so the clearance only has to respect the nonzero
  // obstacles; step adaptation near the root collision at 0 is the tracker's
  // delta_z/delta_log rejection, not the clearance cap.
  double c = default_clearance(s);
  if (!obstacles.empty())
    c = std::min(c, 0.45 * target_distance(obstacles, tau_min * u));
  return plan_path(obstacles, anchor_radius(f, s) * u, tau_min * u, c);
}

double multiplicity_slope(const Polynomial& f, Cx z0, int n_mult, const TauPath& path,
                          const TrackOptions& opts) {
  if (n_mult < 1 || n_mult > std::max(f.degree(), 0))
    throw DomainError("multiplicity_slope: n_mult out of range");

  const std::vector<RootBundle> bundles = track_roots(f, path, opts);
  const RootBundle& last = bundles.back();
  const double tau_end = std::abs(last.tau);
  if (!(tau_end > 0.0)) throw DomainError("multiplicity_slope: path must stop short of tau = 0");

  // the n_mult roots converging to z0, identified at the end of the path
  std::vector<size_t> order(last.roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::abs(last.roots[a] - z0) < std::abs(last.roots[b] - z0);
  });
  order.resize(static_cast<size_t>(n_mult));

  // The main track's accepted steps thin out geometrically near tau = 0, so
  // pin the tail to log-spaced checkpoints instead: re-track outward from the
  // end bundle to |tau| = tau_end * 2^j, retracing the path's final approach.
  // Root indices stay aligned across these continuation legs.
  const Cx u = last.tau / tau_end;
  const double top_cap = std::abs(path.start());
  std::vector<RootBundle> tail{last};
  for (int j = 1; j <= 6; ++j) {
    const double m = tau_end * std::pow(2.0, j);
    if (m > top_cap) break;
    const RootBundle& cur = tail.back();
    const TauPath leg = make_path({cur.tau, m * u}, 0.45 * std::abs(cur.tau));
    tail.push_back(track_roots(f, leg, cur, opts).back());
  }
  if (tail.size() < 5) throw FitDegenerateError("multiplicity_slope: fewer than 5 tail samples");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long n = 0;
  for (const RootBundle& b : tail) {
    const double x = std::log(std::abs(b.tau));
    for (size_t k : order) {
      const double r = std::abs(b.roots[k] - z0);
      if (r <= 0.0) continue;
      const double y = std::log(r);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw FitDegenerateError("multiplicity_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace momentlab
