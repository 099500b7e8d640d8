#pragma once

#include <complex>
#include <vector>

#include "momentlab/polynomial.hpp"

namespace momentlab {

struct RootResult {
  std::complex<double> value;
  double radius;  // a-posteriori bound on the distance to a true root
};

// All deg(p) roots with multiplicity. Aberth-Ehrlich iteration seeded on a
// coefficient-based circle, companion-matrix eigenvalues as fallback, then a
// Newton polish whose residuals are evaluated in exact rational arithmetic.
std::vector<RootResult> roots(const Polynomial& p);

// Plain double-precision root finding for internally built polynomials
// (no exact coefficients available). Same Aberth + companion machinery.
std::vector<std::complex<double>> polyroots_double(const std::vector<std::complex<double>>& coeffs);

enum class PointKind { Endpoint0, Endpoint1, CriticalValue };

struct CriticalPoint {
  std::complex<double> value;
  double radius;
  std::vector<PointKind> kinds;  // sorted, unique; may hold several after merging
};

// The finite set that can obstruct continuation: every critical value of f
// together with the endpoint values f(0) and f(1). Elements closer than the
// sum of their error radii are merged.
struct CriticalSet {
  std::vector<CriticalPoint> elements;
  double max_modulus = 0.0;

  std::vector<std::complex<double>> values() const;
  // Minimum pairwise distance between distinct elements; +inf when fewer than 2.
  double min_gap() const;
};

CriticalSet critical_set(const Polynomial& f);

// Degenerate set for deg(f) <= 0, where critical_set does not apply:
// S = {f(0)} = {f(1)} with no interior critical values.
CriticalSet constant_critical_set(const Polynomial& f);

struct SupNorm {
  double value;   // max of |f| on [0,1]
  double argmax;  // where it is attained
  double error;   // bound on the value error
};

// Exact-candidate maximization: |f|^2 restricted to real x is a rational
// polynomial whose interior critical points plus the endpoints carry the max.
SupNorm sup_norm(const Polynomial& f);

}  // namespace momentlab
