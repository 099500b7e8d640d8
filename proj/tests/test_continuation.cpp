#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "momentlab/continuation.hpp"
#include "momentlab/corpus.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/moments.hpp"
#include "momentlab/path.hpp"
#include "momentlab/spectrum.hpp"
#include "momentlab/tracking.hpp"
#include "oracles.hpp"

using namespace momentlab;
using Cx = std::complex<double>;

TEST_CASE("series: geometric closed form for constants") {
  Polynomial f = parse_poly("3/4");
  FValue v = f_series(f, Cx(0.5, 0));  // 1/(1 - 3/8) = 8/5
  CHECK(std::abs(v.value - Cx(1.6, 0)) < v.error_estimate + 1e-12);
  CHECK(v.method == FMethod::Series);
}

TEST_CASE("series: F(0) = 1 exactly") {
  for (const char* txt : {"0,1", "1/2,-1,3", "1+1i,0,2i"}) {
    FValue v = f_series(parse_poly(txt), Cx(0, 0));
    CHECK(v.value == Cx(1, 0));
    CHECK(v.error_estimate == 0.0);
  }
}

TEST_CASE("series: f = x at t = 1/2 hits the closed form") {
  FValue v = f_series(parse_poly("0,1"), Cx(0.5, 0));
  CHECK(std::abs(v.value - Cx(2.0 * std::log(2.0), 0)) <= v.error_estimate + 1e-13);
  CHECK(v.error_estimate < 1e-12);
}

TEST_CASE("series: domain error outside the convergence margin") {
  Polynomial f = parse_poly("0,1");  // M(f) = 1
  CHECK_THROWS_AS((void)f_series(f, Cx(0.96, 0)), DomainError);
  CHECK_THROWS_AS((void)f_series(f, Cx(0, 1.2)), DomainError);
  CHECK_NOTHROW((void)f_series(f, Cx(0, 0.9)));
}

TEST_CASE("series: sequence overload checks the sequence matches") {
  Polynomial f = parse_poly("0,1");
  MomentSequence other = moment_sequence(parse_poly("0,2"), 50);
  CHECK_THROWS_AS((void)f_series(f, other, Cx(0.1, 0)), DomainError);
}

TEST_CASE("series: huge moments are handled in log space") {
  // f = 9x: moments 9^n/(n+1) overflow no double at n = 200... and still work
  Polynomial f = parse_poly("0,9");
  FValue v = f_series(f, Cx(0.05, 0));  // |t| M = 0.45
  // oracle: sum t^n 9^n/(n+1) = -log(1 - 9t)/(9t)
  Cx oracle = -std::log(Cx(1.0 - 0.45, 0)) / Cx(0.45, 0);
  CHECK(std::abs(v.value - oracle) < 1e-10);
}

TEST_CASE("quadrature: f = x at t = 1/2") {
  CriticalSet s = critical_set(parse_poly("0,1"));
  FValue v = f_quadrature(parse_poly("0,1"), Cx(0.5, 0), s);
  CHECK(std::abs(v.value - Cx(2.0 * std::log(2.0), 0)) < 1e-9);
}

TEST_CASE("quadrature: constant integrand") {
  Polynomial f = parse_poly("1");
  FValue v = f_quadrature(f, Cx(0.5, 0), constant_critical_set(f));
  CHECK(std::abs(v.value - Cx(2, 0)) < 1e-12);
}

TEST_CASE("quadrature: pole on the contour is refused") {
  CriticalSet s = critical_set(parse_poly("0,1"));
  CHECK_THROWS_AS((void)f_quadrature(parse_poly("0,1"), Cx(2, 0), s), PoleOnContourError);
}

TEST_CASE("quadrature: 1/t in the singular set is refused") {
  CriticalSet s = critical_set(parse_poly("0,1"));  // S = {0, 1}
  CHECK_THROWS_AS((void)f_quadrature(parse_poly("0,1"), Cx(1, 0), s), DomainError);
}

TEST_CASE("quadrature: complex t cross-checked against Simpson") {
  Polynomial f = parse_poly("0,-1/3,1");  // x^2 - x/3
  CriticalSet s = critical_set(f);
  for (Cx t : {Cx(0, 1), Cx(1.5, 0.5), Cx(-2, 0.3)}) {
    FValue v = f_quadrature(f, t, s);
    Cx ref = oracle::integrate([&](double x) {
      return 1.0 / (1.0 - t * (x * x - x / 3.0));
    });
    CHECK(std::abs(v.value - ref) < 1e-9);
  }
}

TEST_CASE("partial fraction: f = x single-term closed forms") {
  Polynomial f = parse_poly("0,1");
  // tau = 2, i.e. t = 1/2
  FValue v = f_partial_fraction(f, initial_bundle(f, Cx(2, 0)));
  CHECK(std::abs(v.value - Cx(2.0 * std::log(2.0), 0)) < 1e-12);
  CHECK(std::abs(v.t - Cx(0.5, 0)) < 1e-15);
  // tau = -1, i.e. t = -1: F = log 2
  FValue w = f_partial_fraction(f, initial_bundle(f, Cx(-1, 0)));
  CHECK(std::abs(w.value - Cx(std::log(2.0), 0)) < 1e-12);
}

TEST_CASE("partial fraction refuses coincident roots") {
  Polynomial f = parse_poly("0,0,1");
  RootBundle fake = initial_bundle(f, Cx(4, 0));
  fake.roots[0] = fake.roots[1];
  CHECK_THROWS_AS((void)f_partial_fraction(f, fake), CoincidentRootsError);
}

TEST_CASE("monic normalization: non-monic f agrees with quadrature at |tau| = 10") {
  // spec-shaped instance: f = x(1-x) has leading coefficient -1
  Polynomial f = parse_poly("0,1,-1");
  CriticalSet s = critical_set(f);
  for (Cx u : {Cx(1, 0), Cx(0, 1), Cx(-0.6, 0.8)}) {
    Cx t = u / 10.0;  // tau = 10 / u
    FValue pf = evaluate_pf(f, t, s);
    FValue quad = f_quadrature(f, t, s);
    CHECK(std::abs(pf.value - quad.value) < 1e-6);
  }
}

TEST_CASE("partial fraction agrees with the series well inside the disc") {
  Polynomial f = parse_poly("0,0,-1,1");  // x^2 (x - 1), M(f) = 4/27
  CriticalSet s = critical_set(f);
  FValue ser = f_series(f, Cx(0.3, 0.2));
  FValue pf = evaluate_pf(f, Cx(0.3, 0.2), s);
  CHECK(std::abs(ser.value - pf.value) < 1e-9);
}

TEST_CASE("evaluate_pf rejects bad targets") {
  Polynomial f = parse_poly("0,1");
  CriticalSet s = critical_set(f);
  CHECK_THROWS_AS((void)evaluate_pf(f, Cx(0, 0), s), DomainError);
  CHECK_THROWS_AS((void)evaluate_pf(f, Cx(1, 0), s), DomainError);  // tau = 1 in S
  CHECK_THROWS_AS((void)evaluate_pf(parse_poly("5"), Cx(0.1, 0), s), DomainError);
}

TEST_CASE("the continued value across the cut matches the ccw-detour branch") {
  // f = x at real t = 2: tau = 1/2 is reached by detouring above the obstacle
  // at 1, which continues log(1-t) to log(t-1) + i*pi.
  Polynomial f = parse_poly("0,1");
  CriticalSet s = critical_set(f);
  FValue v = evaluate_pf(f, Cx(2, 0), s);
  CHECK(std::abs(v.value - oracle::f_of_x_continued(2.0)) < 1e-9);
}

TEST_CASE("decay probe: f = x stays bounded and matches the closed form") {
  Polynomial f = parse_poly("0,1");
  auto rows = decay_probe(f, Cx(1, 0), {10.0, 100.0, 1000.0});
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].scaled < 2.0);
    double expect = std::abs(oracle::f_of_x_continued(rows[i].t_abs));
    CHECK(rows[i].f_abs == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("decay probe: f = x^2 along direction i stays bounded") {
  Polynomial f = parse_poly("0,0,1");
  auto rows = decay_probe(f, Cx(0, 1), {10.0, 100.0});
  REQUIRE(rows.size() == 2);
  for (const DecayRow& r : rows) CHECK(r.scaled < 2.0);
  // cross-check the first magnitude against quadrature at the same t = 10i
  // (1 - 10i*x^2 never vanishes on [0,1], so the contour is pole-free)
  CriticalSet s = critical_set(f);
  FValue q = f_quadrature(f, Cx(0, 10), s);
  CHECK(rows[0].f_abs == doctest::Approx(std::abs(q.value)).epsilon(1e-8));
}

TEST_CASE("decay probe validates its input") {
  Polynomial f = parse_poly("0,1");
  CHECK_THROWS_AS((void)decay_probe(parse_poly("2"), Cx(1, 0), {10.0}), DomainError);
  CHECK_THROWS_AS((void)decay_probe(f, Cx(0, 0), {10.0}), DomainError);
  CHECK_THROWS_AS((void)decay_probe(f, Cx(1, 0), {100.0, 10.0}), DomainError);  // not increasing
}

TEST_CASE("shrink path reaches tau_min and respects the nonzero obstacles") {
  Polynomial f = parse_poly("0,0,1");  // S = {0, 1}
  CriticalSet s = critical_set(f);
  TauPath path = plan_shrink_path(f, s, Cx(-1, 0), 1e-4);
  CHECK(std::abs(std::abs(path.end()) - 1e-4) < 1e-12);
  CHECK(std::abs(path.start()) >= anchor_radius(f, s) - 1e-9);
  CHECK(polyline_min_distance(path.waypoints, Cx(1, 0)) >= path.clearance * (1.0 - 1e-9));
}

TEST_CASE("multiplicity exponents") {
  // simple zero: slope 1
  {
    Polynomial f = parse_poly("0,1");
    CriticalSet s = critical_set(f);
    TauPath path = plan_shrink_path(f, s, Cx(-1, 0), 1e-5);
    double slope = multiplicity_slope(f, Cx(0, 0), 1, path);
    CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
  }
  // double zero: slope 1/2
  {
    Polynomial f = parse_poly("0,0,1");
    CriticalSet s = critical_set(f);
    TauPath path = plan_shrink_path(f, s, Cx(-1, 0), 1e-5);
    double slope = multiplicity_slope(f, Cx(0, 0), 2, path);
    CHECK(slope == doctest::Approx(0.5).epsilon(0.05));
  }
}

TEST_CASE("multiplicity slope validates n_mult") {
  Polynomial f = parse_poly("0,0,1");
  CriticalSet s = critical_set(f);
  TauPath path = plan_shrink_path(f, s, Cx(-1, 0), 1e-3);
  CHECK_THROWS_AS((void)multiplicity_slope(f, Cx(0, 0), 0, path), DomainError);
  CHECK_THROWS_AS((void)multiplicity_slope(f, Cx(0, 0), 5, path), DomainError);
}

TEST_CASE("anchor radius dominates the critical set and the small-disc image") {
  Polynomial f = parse_poly("0,1");
  CriticalSet s = critical_set(f);
  double r = anchor_radius(f, s);
  CHECK(r >= 2.0 * s.max_modulus + 1.0);
  // B2 = sum |a_k| 2^k = 2 for f = x, so r >= 1.25*2 + 1
  CHECK(r >= 3.5 - 1e-12);
  // every root of f - tau at |tau| = r lies outside |z| = 2
  RootBundle b = initial_bundle(f, Cx(r, 0));
  for (Cx z : b.roots) CHECK(std::abs(z) >= 2.0 - 1e-9);
}
