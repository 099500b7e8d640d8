#include "momentlab/spectrum.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {

using Cx = std::complex<double>;

// p and p' at z by Horner, double precision.
void eval_pd(const std::vector<Cx>& c, Cx z, Cx& p, Cx& dp) {
  p = c.back();
  dp = 0.0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

double max_residual(const std::vector<Cx>& c, const std::vector<Cx>& z) {
  double worst = 0.0;
  for (Cx zk : z) {
    Cx p, dp;
    eval_pd(c, zk, p, dp);
    worst = std::max(worst, std::abs(p));
  }
  return worst;
}

// Aberth-Ehrlich simultaneous iteration. Converges fast for simple roots;
// clusters stall and are handed to the caller with converged=false.
std::vector<Cx> aberth(const std::vector<Cx>& c, bool& converged) {
  const int d = static_cast<int>(c.size()) - 1;
  double cauchy = 0.0;
  for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(c[k] / c[d]));
  const double r0 = 1.0 + cauchy;

  std::vector<Cx> z(d);
  for (int k = 0; k < d; ++k) {
    // staggered radii + an angular offset avoid symmetric stalemates
    double th = 2.0 * std::numbers::pi * k / d + 0.4;
    z[k] = std::polar(r0 * (0.3 + 0.6 * (k + 1.0) / d), th);
  }

  std::vector<char> done(d, 0);
  for (int iter = 0; iter < 300; ++iter) {
    int ndone = 0;
    for (int k = 0; k < d; ++k) {
      if (done[k]) {
        ++ndone;
        continue;
      }
      Cx p, dp;
      eval_pd(c, z[k], p, dp);
      if (std::abs(p) == 0.0) {
        done[k] = 1;
        ++ndone;
        continue;
      }
      if (std::abs(dp) == 0.0) {
        z[k] *= Cx(1.0, 1e-6);  // nudge off a stationary point
        continue;
      }
      Cx ratio = p / dp;
      Cx s = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Cx diff = z[k] - z[j];
        if (std::abs(diff) < 1e-300) diff = Cx(1e-300, 0.0);
        s += 1.0 / diff;
      }
      Cx den = 1.0 - ratio * s;
      Cx w = (std::abs(den) > 1e-300) ? ratio / den : ratio;
      z[k] -= w;
      if (std::abs(w) < 1e-14 * (1.0 + std::abs(z[k]))) {
        done[k] = 1;
        ++ndone;
      }
    }
    if (ndone == d) {
      converged = true;
      return z;
    }
  }
  converged = false;
  return z;
}

std::vector<Cx> companion_roots(const std::vector<Cx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) a(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) a(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NoConvergenceError("companion eigensolver failed");
  std::vector<Cx> z(d);
  for (int i = 0; i < d; ++i) z[i] = es.eigenvalues()(i);
  return z;
}

ComplexRational to_exact(Cx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NumericError("non-finite value where an exact conversion was required");
  return ComplexRational(Rational(z.real()), Rational(z.imag()));
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Cx> polyroots_double(const std::vector<Cx>& coeffs) {
  std::vector<Cx> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  for (Cx ck : c)
    if (!std::isfinite(ck.real()) || !std::isfinite(ck.imag()))
      throw NumericError("polyroots: non-finite coefficient");
  double scale = 0.0;
  for (Cx ck : c) scale = std::max(scale, std::abs(ck));
  for (Cx& ck : c) ck /= scale;
  if (c.size() == 2) return {-c[0] / c[1]};

  bool ok = false;
  std::vector<Cx> z = aberth(c, ok);
  if (!ok) {
    std::vector<Cx> ze = companion_roots(c);
    if (max_residual(c, ze) < max_residual(c, z)) z = ze;
  }
  for (Cx zk : z)
    if (!std::isfinite(zk.real()) || !std::isfinite(zk.imag()))
      throw NoConvergenceError("polyroots: iteration produced non-finite root");
  return z;
}

std::vector<RootResult> roots(const Polynomial& p) {
  if (p.degree() < 1) throw DomainError("roots: polynomial must have degree >= 1");
  std::vector<RootResult> out;

  // peel off exact roots at the origin first
  Polynomial q = p;
  while (q.degree() >= 1 && q.coeff(0).is_zero()) {
    out.push_back({Cx(0.0, 0.0), 0.0});
    std::vector<ComplexRational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = Polynomial(std::move(shifted));
  }
  if (q.degree() == 0) return out;

  const int d = q.degree();
  const Polynomial qp = derivative(q);
  const double lead = std::abs(q.leading().to_complex());
  std::vector<Cx> zs = polyroots_double(q.coeffs_double());

  for (Cx z : zs) {
    // Newton polish with the residual evaluated in exact arithmetic
    for (int it = 0; it < 3; ++it) {
      Cx pv = q.eval_exact(to_exact(z)).to_complex();
      if (std::abs(pv) == 0.0) break;
      Cx dv = qp.eval(z);
      if (std::abs(dv) == 0.0) break;
      Cx step = pv / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;  // not contracting
      z -= step;
    }
    Cx pv = q.eval_exact(to_exact(z)).to_complex();
    Cx dv = qp.eval(z);
    // two a-posteriori inclusion radii; the second also covers multiple roots
    double r1 = std::abs(dv) > 0.0 ? d * std::abs(pv) / std::abs(dv)
                                   : std::numeric_limits<double>::infinity();
    double r2 = std::pow(std::abs(pv) / lead, 1.0 / d);
    double r = std::min(r1, r2);
    if (!std::isfinite(r)) r = r2;
    out.push_back({z, r});
  }
  return out;
}

std::vector<Cx> CriticalSet::values() const {
  std::vector<Cx> v;
  v.reserve(elements.size());
  for (const CriticalPoint& e : elements) v.push_back(e.value);
  return v;
}

double CriticalSet::min_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      gap = std::min(gap, std::abs(elements[i].value - elements[j].value));
  return gap;
}

namespace {

// One merge pass: union every pair closer than the sum of radii (or the
// absolute floor), collapse clusters onto their sharpest member. Returns
// whether anything was merged.
bool merge_pass(std::vector<CriticalPoint>& pts, double floor_tol) {
  const int n = static_cast<int>(pts.size());
  DisjointSet ds(n);
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dist = std::abs(pts[i].value - pts[j].value);
      if (dist <= std::max(pts[i].radius + pts[j].radius, floor_tol)) {
        ds.unite(i, j);
        any = true;
      }
    }
  if (!any) return false;

  std::vector<CriticalPoint> merged_pts;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    int r = ds.find(i);
    if (used[r]) continue;
    used[r] = 1;
    int rep = -1;  // most precisely located member
    for (int j = 0; j < n; ++j)
      if (ds.find(j) == r && (rep < 0 || pts[j].radius < pts[rep].radius)) rep = j;
    CriticalPoint merged;
    merged.value = pts[rep].value;
    merged.radius = 0.0;
    for (int j = 0; j < n; ++j) {
      if (ds.find(j) != r) continue;
      merged.radius = std::max(merged.radius,
                               std::abs(pts[j].value - merged.value) + pts[j].radius);
      for (PointKind k : pts[j].kinds) merged.kinds.push_back(k);
    }
    std::sort(merged.kinds.begin(), merged.kinds.end());
    merged.kinds.erase(std::unique(merged.kinds.begin(), merged.kinds.end()),
                       merged.kinds.end());
    merged_pts.push_back(std::move(merged));
  }
  pts = std::move(merged_pts);
  return true;
}

}  // namespace

CriticalSet critical_set(const Polynomial& f) {
  if (f.degree() < 1) throw DomainError("critical_set: polynomial must have degree >= 1");
  std::vector<CriticalPoint> raw;

  auto push_exact = [&raw](ComplexRational v, PointKind kind) {
    Cx z = v.to_complex();
    raw.push_back({z, 4e-16 * (1.0 + std::abs(z)), {kind}});
  };
  push_exact(f.eval_exact(ComplexRational(0)), PointKind::Endpoint0);
  push_exact(f.eval_exact(ComplexRational(1)), PointKind::Endpoint1);

  const Polynomial fp = derivative(f);
  if (fp.degree() >= 1) {
    const Polynomial fpp = derivative(fp);
    for (const RootResult& rt : roots(fp)) {
      Cx fz = f.eval_exact(to_exact(rt.value)).to_complex();
      double slope = std::abs(fp.eval(rt.value));  // near zero: rt.value is a root of f'
      double curve = std::abs(fpp.eval(rt.value));
      double r = rt.radius * (slope + 2.0 * rt.radius * curve) + 4e-16 * (1.0 + std::abs(fz));
      raw.push_back({fz, r, {PointKind::CriticalValue}});
    }
  }

  double maxmod = 0.0;
  for (const CriticalPoint& e : raw) maxmod = std::max(maxmod, std::abs(e.value));
  const double floor_tol = 1e-9 * (1.0 + maxmod);

  // iterate to a fixpoint: merging inflates radii, which can trigger new merges
  while (merge_pass(raw, floor_tol)) {
  }

  CriticalSet s;
  s.elements = std::move(raw);
  std::sort(s.elements.begin(), s.elements.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });
  for (const CriticalPoint& e : s.elements)
    s.max_modulus = std::max(s.max_modulus, std::abs(e.value));
  return s;
}

CriticalSet constant_critical_set(const Polynomial& f) {
  if (f.degree() > 0) throw DomainError("constant_critical_set: polynomial is not constant");
  Cx c = f.coeff(0).to_complex();
  CriticalSet s;
  s.elements.push_back(CriticalPoint{
      c, 4e-16 * (1.0 + std::abs(c)), {PointKind::Endpoint0, PointKind::Endpoint1}});
  s.max_modulus = std::abs(c);
  return s;
}

SupNorm sup_norm(const Polynomial& f) {
  if (f.is_zero()) return {0.0, 0.0, 0.0};
  if (f.degree() == 0) {
    double v = std::sqrt(to_double(f.coeff(0).abs2()));
    return {v, 0.0, 4e-16 * v};
  }

  // q(x) = f(x) * conj(f)(conj(x)) has rational real coefficients and equals
  // |f(x)|^2 for real x, so the maximum sits at an endpoint or a root of q'.
  const Polynomial q = f * f.conjugate();
  auto qval = [&q](const Rational& x) { return q.eval_exact(ComplexRational(x)).re; };

  Rational best_x(0);
  Rational best_q = qval(Rational(0));
  double best_err_q = 0.0;
  {
    Rational q1 = qval(Rational(1));
    if (q1 > best_q) {
      best_q = q1;
      best_x = Rational(1);
    }
  }

  const Polynomial qp = derivative(q);
  if (qp.degree() >= 1) {
    const Polynomial qpp = derivative(qp);
    for (const RootResult& rt : roots(qp)) {
      double slack = rt.radius + 1e-9;
      if (std::abs(rt.value.imag()) > slack) continue;
      double x = rt.value.real();
      if (x < -slack || x > 1.0 + slack) continue;
      x = std::clamp(x, 0.0, 1.0);
      Rational xr(x);
      Rational qx = qval(xr);
      if (qx > best_q) {
        best_q = qx;
        best_x = xr;
        best_err_q = rt.radius * (std::abs(qp.eval(Cx(x, 0.0))) +
                                  2.0 * rt.radius * std::abs(qpp.eval(Cx(x, 0.0))));
      }
    }
  }

  double v = std::sqrt(to_double(best_q));
  double err = 4e-16 * (1.0 + v);
  if (v > 0.0) err += 0.5 * best_err_q / v;
  return {v, to_double(best_x), err};
}

}  // namespace momentlab
