#pragma once

#include <complex>
#include <vector>

#include "momentlab/moments.hpp"
#include "momentlab/path.hpp"
#include "momentlab/spectrum.hpp"
#include "momentlab/tracking.hpp"

namespace momentlab {

enum class FMethod { Series, Quadrature, PartialFraction };

struct FValue {
  std::complex<double> t;
  std::complex<double> value;
  FMethod method;
  double error_estimate;
};

// Truncated power series Σ tⁿ Mₙ with a geometric tail bound. Requires
// |t|·M(f) < 1 - margin. Terms are formed in log/phase space, so moment
// magnitudes far beyond double range are fine.
FValue f_series(const Polynomial& f, const MomentSequence& seq, std::complex<double> t,
                double margin = 0.05);
FValue f_series(const Polynomial& f, std::complex<double> t, int n_max = 200,
                double margin = 0.05);

// Adaptive Gauss-Kronrod quadrature of ∫₀¹ dx/(1 - t f(x)). Refuses t whose
// reciprocal lies in S and t that puts a pole of the integrand on [0,1].
FValue f_quadrature(const Polynomial& f, std::complex<double> t, const CriticalSet& s,
                    double rel_tol = 1e-10);

// The residue formula F = (-1/(a_d t))·Σ_k [Π_{l≠k} 1/(z_k - z_l)]·L_k over a
// tracked bundle at τ = 1/t. The polynomial need not be monic: with
// g = f/a_d, σ = τ/a_d one has f - τ = a_d(g - σ), so the roots coincide and
// the monic formula applies verbatim with the extra 1/a_d factor.
FValue f_partial_fraction(const Polynomial& f, const RootBundle& bundle);

// Full pipeline: anchor a bundle at a large radius on the ray through τ = 1/t
// (where all roots satisfy |z| ≥ 2 and the principal branch is the analytic
// one), track radially down to τ, and apply the partial-fraction formula.
// clearance = 0 picks default_clearance(s) capped by the target's distance
// to S.
FValue evaluate_pf(const Polynomial& f, std::complex<double> t, const CriticalSet& s,
                   double clearance = 0.0);

struct DecayRow {
  double t_abs;
  double f_abs;
  double scaled;  // |F|·|t|^{1/d} / max(1, log|t|)
};

// Evaluates F along t = |t|·direction for increasing magnitudes via chained
// partial-fraction tracking toward τ → 0; the scaled column must stay bounded.
std::vector<DecayRow> decay_probe(const Polynomial& f, std::complex<double> direction,
                                  const std::vector<double>& t_magnitudes);

// Straight shrink path anchor·u → tau_min·u planned against the nonzero
// elements of S (τ = 0 itself is exempt; the path stops at |τ| = tau_min).
TauPath plan_shrink_path(const Polynomial& f, const CriticalSet& s,
                         std::complex<double> direction, double tau_min);

// Least-squares slope of log|z_k - z0| against log|τ| over the tracked tail,
// pooled over the n_mult roots converging to z0. Expected ≈ 1/n_mult.
double multiplicity_slope(const Polynomial& f, std::complex<double> z0, int n_mult,
                          const TauPath& path, const TrackOptions& opts = {});

// Anchor radius: dominates both max|S| and the |z| ≤ 2 image of f, so the
// principal logarithm branch is the analytic one at the anchor.
double anchor_radius(const Polynomial& f, const CriticalSet& s);

}  // namespace momentlab
