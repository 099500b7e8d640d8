#pragma once

#include <complex>
#include <vector>

#include "momentlab/path.hpp"
#include "momentlab/polynomial.hpp"

namespace momentlab {

// Snapshot of the d solutions of f(z) = τ at one τ, together with the
// continuously lifted logarithms L_k = log((1-z_k)/(-z_k)) and their winding
// counts relative to the principal branch.
struct RootBundle {
  std::complex<double> tau;
  std::vector<std::complex<double>> roots;
  std::vector<std::complex<double>> logs;
  std::vector<long> branch_offsets;
};

struct TrackOptions {
  double newton_tol = 1e-12;      // accept when |f(z)-τ| ≤ newton_tol·(1+|τ|)
  int max_newton = 40;
  double delta_log = 1.5707963267948966;  // reject a step on a log jump > π/2
  double delta_z_factor = 0.5;    // reject when a root moves > factor·(min pairwise dist)
  double min_step_factor = 1e-9;  // step underflow below clearance·factor
  long max_attempts = 50000000;   // hard cap on accepted+rejected steps
};

// Roots of f(z) = tau by the global root-finder, Newton-polished, ordered
// deterministically, with principal-branch logarithms (branch_offsets = 0).
RootBundle initial_bundle(const Polynomial& f, std::complex<double> tau,
                          const TrackOptions& opts = {});

// Predictor-corrector continuation along the path, starting from a fresh
// initial_bundle at path.start(). Returns one bundle per accepted step,
// including the initial one.
std::vector<RootBundle> track_roots(const Polynomial& f, const TauPath& path,
                                    const TrackOptions& opts = {});

// Same, but continues from a caller-supplied bundle (whose tau must coincide
// with path.start()); used to chain legs without re-anchoring the branch.
std::vector<RootBundle> track_roots(const Polynomial& f, const TauPath& path,
                                    const RootBundle& start, const TrackOptions& opts = {});

}  // namespace momentlab
