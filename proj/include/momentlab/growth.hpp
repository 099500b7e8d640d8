#pragma once

#include "momentlab/moments.hpp"
#include "momentlab/spectrum.hpp"

namespace momentlab {

enum class GrowthMethod { SlopeFit, WindowedRootMax, RatioSubsequence };

struct GrowthEstimate {
  double estimate = 0.0;
  GrowthMethod method = GrowthMethod::SlopeFit;
  int n_lo = 0, n_hi = 0;    // window actually used
  int nonzero_count = 0;     // non-zero moments inside the window (exact test)
  double diagnostics = 0.0;  // RMS residual of the fit (slope-fit only)
};

// Estimates limsup |Mₙ|^{1/n} from the window [n_lo, n_hi] of the sequence.
// Exact-zero moments carry no information about the limsup and are skipped.
//   slope-fit:            exp(slope) of least-squares log|Mₙ| vs n (needs ≥ 10 points)
//   windowed-root-max:    max |Mₙ|^{1/n} (needs ≥ 1 point)
//   ratio-subsequence:    median |M_{n+k}/Mₙ|^{1/k} over consecutive non-zero pairs (needs ≥ 3)
GrowthEstimate estimate_growth(const MomentSequence& seq, GrowthMethod method, int n_lo,
                               int n_hi);

struct RealCaseResult {
  GrowthEstimate estimate;
  double sup;  // M(f)
  double gap;  // |estimate - M(f)|
};

// The real-coefficient case, where the limsup provably equals M(f).
RealCaseResult real_case_check(const Polynomial& f, const MomentSequence& seq, int n_lo,
                               int n_hi);

struct BoundCheck {
  bool holds;
  double slack;  // max|S| - estimate
};

// limsup ≤ max{|s| : s ∈ S}, within a relative tolerance.
BoundCheck bound_check(const GrowthEstimate& est, const CriticalSet& s, double tol = 0.05);

struct ConjectureCheck {
  bool equal_within;
  double gap;  // signed: estimate - max|S|
};

// Open question: limsup = max|S|? Gathers the evidence, never judges.
ConjectureCheck conjecture_check(const GrowthEstimate& est, const CriticalSet& s,
                                 double tol = 0.05);

}  // namespace momentlab
