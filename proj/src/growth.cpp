#include "momentlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "momentlab/errors.hpp"

namespace momentlab {

GrowthEstimate estimate_growth(const MomentSequence& seq, GrowthMethod method, int n_lo,
                               int n_hi) {
  if (n_lo < 0 || n_hi > seq.n_max() || n_lo > n_hi)
    throw DomainError("estimate_growth: window outside the sequence range");

  // (n, log|Mₙ|) over the non-zero moments; n ≥ 1 so the n-th root is defined
  std::vector<std::pair<int, double>> pts;
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n)
    if (!seq.at(n).is_zero()) pts.push_back({n, log_abs(seq.at(n))});

  GrowthEstimate out;
  out.method = method;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.nonzero_count = static_cast<int>(pts.size());

  switch (method) {
    case GrowthMethod::SlopeFit: {
      if (pts.size() < 10)
        throw InsufficientDataError("slope-fit needs at least 10 non-zero moments in the window");
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (auto [n, y] : pts) {
        sx += n;
        sy += y;
        sxx += static_cast<double>(n) * n;
        sxy += n * y;
      }
      const double m = static_cast<double>(pts.size());
      const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
      const double icept = (sy - slope * sx) / m;
      double rss = 0;
      for (auto [n, y] : pts) {
        const double r = y - (icept + slope * n);
        rss += r * r;
      }
      out.estimate = std::exp(slope);
      out.diagnostics = std::sqrt(rss / m);
      break;
    }
    case GrowthMethod::WindowedRootMax: {
      if (pts.empty())
        throw InsufficientDataError("windowed-root-max needs a non-zero moment in the window");
      double best = -std::numeric_limits<double>::infinity();
      for (auto [n, y] : pts) best = std::max(best, y / n);
      out.estimate = std::exp(best);
      break;
    }
    case GrowthMethod::RatioSubsequence: {
      if (pts.size() < 3)
        throw InsufficientDataError("ratio-subsequence needs at least 3 non-zero moments");
      std::vector<double> ratios;
      ratios.reserve(pts.size() - 1);
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double k = pts[i + 1].first - pts[i].first;
        ratios.push_back(std::exp((pts[i + 1].second - pts[i].second) / k));
      }
      std::sort(ratios.begin(), ratios.end());
      const size_t mid = ratios.size() / 2;
      out.estimate = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
      break;
    }
  }
  return out;
}

RealCaseResult real_case_check(const Polynomial& f, const MomentSequence& seq, int n_lo,
                               int n_hi) {
  if (!f.is_real()) throw DomainError("real_case_check: polynomial has complex coefficients");
  RealCaseResult r;
  r.estimate = estimate_growth(seq, GrowthMethod::SlopeFit, n_lo, n_hi);
  r.sup = sup_norm(f).value;
  r.gap = std::abs(r.estimate.estimate - r.sup);
  return r;
}

BoundCheck bound_check(const GrowthEstimate& est, const CriticalSet& s, double tol) {
  return {est.estimate <= s.max_modulus * (1.0 + tol), s.max_modulus - est.estimate};
}

ConjectureCheck conjecture_check(const GrowthEstimate& est, const CriticalSet& s, double tol) {
  const double gap = est.estimate - s.max_modulus;
  return {std::abs(gap) <= tol * std::max(s.max_modulus, 1e-6), gap};
}

}  // namespace momentlab
