#include "momentlab/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "momentlab/errors.hpp"
#include "momentlab/spectrum.hpp"

namespace momentlab {

namespace {

using Cx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HornerF {
  std::vector<Cx> c;
  void eval(Cx z, Cx& p, Cx& dp) const {
    p = c.back();
    dp = 0.0;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
  }
};

double min_pairwise(const std::vector<Cx>& zs) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t j = i + 1; j < zs.size(); ++j) best = std::min(best, std::abs(zs[i] - zs[j]));
  return best;
}

// Newton on f(z) - tau from the predicted point; returns success.
bool newton_correct(const HornerF& f, Cx tau, Cx& z, const TrackOptions& opts) {
  const double target = opts.newton_tol * (1.0 + std::abs(tau));
  for (int it = 0; it < opts.max_newton; ++it) {
    Cx p, dp;
    f.eval(z, p, dp);
    Cx r = p - tau;
    if (std::abs(r) <= target) return true;
    if (std::abs(dp) == 0.0) return false;
    Cx step = r / dp;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
    z -= step;
  }
  Cx p, dp;
  f.eval(z, p, dp);
  return std::abs(p - tau) <= target;
}

// The lifted logarithm: principal value plus the 2πi multiple nearest to the
// previous value. Returns false when z sits on a log singularity.
bool lift_log(Cx z, Cx prev_log, Cx& out, long& offset) {
  if (std::abs(z) < 1e-300 || std::abs(1.0 - z) < 1e-300) return false;
  const Cx principal = std::log((1.0 - z) / (-z));
  const long m = std::lround((prev_log.imag() - principal.imag()) / kTwoPi);
  out = principal + Cx(0.0, kTwoPi * static_cast<double>(m));
  offset = m;
  return true;
}

// Greedy nearest-neighbor matching between old and new root lists. Returns
// true iff the matching is the identity (anything else means a basin jump or
// a collision mid-step, which the caller treats as a rejection).
bool identity_matching(const std::vector<Cx>& olds, const std::vector<Cx>& news) {
  const size_t d = olds.size();
  struct Pair {
    double dist;
    size_t i_new, j_old;
  };
  std::vector<Pair> pairs;
  pairs.reserve(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) pairs.push_back({std::abs(news[i] - olds[j]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return a.dist < b.dist;
  });
  std::vector<char> used_new(d, 0), used_old(d, 0);
  size_t assigned = 0;
  for (const Pair& p : pairs) {
    if (used_new[p.i_new] || used_old[p.j_old]) continue;
    if (p.i_new != p.j_old) return false;
    used_new[p.i_new] = used_old[p.j_old] = 1;
    if (++assigned == d) break;
  }
  return true;
}

}  // namespace

RootBundle initial_bundle(const Polynomial& f, Cx tau, const TrackOptions& opts) {
  if (f.degree() < 1) throw DomainError("initial_bundle: polynomial must have degree >= 1");

  std::vector<Cx> c = f.coeffs_double();
  c[0] -= tau;
  std::vector<Cx> zs = polyroots_double(c);

  HornerF h{f.coeffs_double()};
  for (Cx& z : zs)
    if (!newton_correct(h, tau, z, opts))
      throw RootResidualError("initial_bundle: Newton polish failed at the anchor point");

  std::sort(zs.begin(), zs.end(), [](Cx a, Cx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  RootBundle b;
  b.tau = tau;
  b.roots = std::move(zs);
  b.logs.reserve(b.roots.size());
  b.branch_offsets.assign(b.roots.size(), 0);
  for (Cx z : b.roots) {
    if (std::abs(z) < 1e-300 || std::abs(1.0 - z) < 1e-300)
      throw DomainError("initial_bundle: a root coincides with a log singularity (0 or 1)");
    b.logs.push_back(std::log((1.0 - z) / (-z)));
  }
  return b;
}

std::vector<RootBundle> track_roots(const Polynomial& f, const TauPath& path,
                                    const RootBundle& start, const TrackOptions& opts) {
  if (f.degree() < 1) throw DomainError("track_roots: polynomial must have degree >= 1");
  const size_t d = static_cast<size_t>(f.degree());
  if (start.roots.size() != d || start.logs.size() != d)
    throw DomainError("track_roots: bundle size does not match the polynomial degree");
  if (std::abs(start.tau - path.start()) > 1e-9 * (1.0 + std::abs(start.tau)))
    throw DomainError("track_roots: bundle tau does not match the path start");

  const HornerF h{f.coeffs_double()};
  {
    const double target = 1e-9 * (1.0 + std::abs(start.tau));
    for (Cx z : start.roots) {
      Cx p, dp;
      h.eval(z, p, dp);
      if (std::abs(p - start.tau) > target)
        throw RootResidualError("track_roots: starting bundle fails the residual check");
    }
  }

  std::vector<RootBundle> bundles{start};
  bundles.front().tau = path.start();

  const double total = path.length();
  const double min_step = path.clearance * opts.min_step_factor;
  double s = 0.0;
  double step = path.clearance / 4.0;
  int streak = 0;
  long attempts = 0;
  Cx tau = path.start();

  while (s < total) {
    if (++attempts > opts.max_attempts)
      throw ResourceLimitError("track_roots: step budget exhausted");
    step = std::min(step, path.clearance);
    const double s2 = std::min(s + step, total);
    const Cx tau2 = s2 >= total ? path.end() : path.at(s2);
    const RootBundle& cur = bundles.back();

    const double dz_allow =
        d >= 2 ? opts.delta_z_factor * min_pairwise(cur.roots)
               : std::numeric_limits<double>::infinity();

    bool ok = true;
    std::vector<Cx> next_roots(d), next_logs(d);
    std::vector<long> next_offsets(d);
    for (size_t k = 0; k < d && ok; ++k) {
      Cx z = cur.roots[k];
      Cx p, dp;
      h.eval(z, p, dp);
      if (std::abs(dp) > 0.0) {
        Cx pred = z + (tau2 - tau) / dp;  // Euler predictor along dz/dτ = 1/f'(z)
        if (std::abs(pred - z) <= dz_allow) z = pred;
      }
      if (!newton_correct(h, tau2, z, opts)) {
        ok = false;
        break;
      }
      if (std::abs(z - cur.roots[k]) > dz_allow) {
        ok = false;
        break;
      }
      Cx lifted;
      long offset;
      if (!lift_log(z, cur.logs[k], lifted, offset) ||
          std::abs(lifted - cur.logs[k]) > opts.delta_log) {
        ok = false;
        break;
      }
      next_roots[k] = z;
      next_logs[k] = lifted;
      next_offsets[k] = offset;
    }
    if (ok && d >= 2) ok = identity_matching(cur.roots, next_roots);

    if (!ok) {
      step *= 0.5;
      streak = 0;
      if (step < min_step)
        throw StepUnderflowError(
            "track_roots: step size underflow (path too close to a singular point?)");
      continue;
    }

    bundles.push_back(RootBundle{tau2, std::move(next_roots), std::move(next_logs),
                                 std::move(next_offsets)});
    tau = tau2;
    s = s2;
    if (++streak >= 4) {
      step = std::min(step * 2.0, path.clearance);
      streak = 0;
    }
  }
  return bundles;
}

std::vector<RootBundle> track_roots(const Polynomial& f, const TauPath& path,
                                    const TrackOptions& opts) {
  return track_roots(f, path, initial_bundle(f, path.start(), opts), opts);
}

}  // namespace momentlab
