#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "momentlab/corpus.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/path.hpp"
#include "momentlab/tracking.hpp"

using namespace momentlab;
using Cx = std::complex<double>;

namespace {

// Spec'd bundle invariants: residual and log consistency at every step.
void check_bundle_invariants(const Polynomial& f, const std::vector<RootBundle>& bundles) {
  for (const RootBundle& b : bundles) {
    for (std::size_t k = 0; k < b.roots.size(); ++k) {
      const Cx z = b.roots[k];
      CHECK(std::abs(f.eval(z) - b.tau) < 1e-9 * (1.0 + std::abs(b.tau)));
      CHECK(std::abs(std::exp(b.logs[k]) * (-z) - (1.0 - z)) < 1e-8 * (1.0 + std::abs(z)));
    }
  }
}

std::vector<Cx> circle_waypoints(double radius, int n) {
  std::vector<Cx> w;
  for (int k = 0; k <= n; ++k)
    w.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / n));
  w.back() = w.front();  // close exactly
  return w;
}

}  // namespace

TEST_CASE("initial bundle: sorted roots, principal logs, zero offsets") {
  Polynomial f = parse_poly("0,0,1");  // x^2
  RootBundle b = initial_bundle(f, Cx(4, 0));
  REQUIRE(b.roots.size() == 2);
  CHECK(std::abs(b.roots[0] - Cx(-2, 0)) < 1e-12);
  CHECK(std::abs(b.roots[1] - Cx(2, 0)) < 1e-12);
  for (std::size_t k = 0; k < 2; ++k) {
    Cx principal = std::log((1.0 - b.roots[k]) / (-b.roots[k]));
    CHECK(std::abs(b.logs[k] - principal) < 1e-12);
    CHECK(b.branch_offsets[k] == 0);
  }
}

TEST_CASE("initial bundle rejects roots at the interval endpoints") {
  // f = x at tau = 1: root z = 1 makes (1-z) vanish and the log undefined
  CHECK_THROWS_AS((void)initial_bundle(parse_poly("0,1"), Cx(1, 0)), DomainError);
  CHECK_THROWS_AS((void)initial_bundle(parse_poly("0,1"), Cx(0, 0)), DomainError);
}

TEST_CASE("d = 1: the single root is tau itself all along the path") {
  Polynomial f = parse_poly("0,1");
  TauPath path = make_path({Cx(10, 0), Cx(5, 0)}, 0.5, {Cx(0, 0), Cx(1, 0)});
  auto bundles = track_roots(f, path);
  REQUIRE(bundles.size() >= 2);
  for (const RootBundle& b : bundles) {
    REQUIRE(b.roots.size() == 1);
    CHECK(std::abs(b.roots[0] - b.tau) < 1e-9);
  }
  CHECK(bundles.back().tau == Cx(5, 0));
  Cx expect = std::log(Cx(1.0 - 5.0, 0) / Cx(-5.0, 0));  // log(4/5)
  CHECK(std::abs(bundles.back().logs[0] - expect) < 1e-9);
  check_bundle_invariants(f, bundles);
}

TEST_CASE("x^2 from 9 to 2 tracks +-sqrt(tau) without branch crossing") {
  // endpoint 2 stays clear of S = {0, 1}
  Polynomial f = parse_poly("0,0,1");
  TauPath path = make_path({Cx(9, 0), Cx(2, 0)}, 0.4, {});
  auto bundles = track_roots(f, path);
  for (const RootBundle& b : bundles) {
    const double r = std::sqrt(b.tau.real());
    CHECK(std::abs(b.roots[0] - Cx(-r, 0)) < 1e-8);
    CHECK(std::abs(b.roots[1] - Cx(r, 0)) < 1e-8);
  }
  const double rt2 = std::sqrt(2.0);
  CHECK(std::abs(bundles.back().roots[0] - Cx(-rt2, 0)) < 1e-9);
  CHECK(std::abs(bundles.back().roots[1] - Cx(rt2, 0)) < 1e-9);
  for (long off : bundles.back().branch_offsets) CHECK(off == 0);
  check_bundle_invariants(f, bundles);
}

TEST_CASE("monodromy: a full loop around tau = 0 swaps the roots of x^2") {
  Polynomial f = parse_poly("0,0,1");
  TauPath loop = make_path(circle_waypoints(4.0, 64), 0.5, {Cx(0, 0), Cx(1, 0)});
  auto bundles = track_roots(f, loop);
  const RootBundle& a = bundles.front();
  const RootBundle& z = bundles.back();
  CHECK(std::abs(z.tau - a.tau) < 1e-12);
  CHECK(std::abs(z.roots[0] - a.roots[1]) < 1e-6);
  CHECK(std::abs(z.roots[1] - a.roots[0]) < 1e-6);
  check_bundle_invariants(f, bundles);
}

TEST_CASE("path reversal brings every root home (identity monodromy)") {
  Polynomial f = parse_poly("1/2,-1,0,1");  // x^3 - x + 1/2
  TauPath there = make_path({Cx(6, 0), Cx(6, 5), Cx(-6, 5), Cx(-6, 0)}, 0.5, {});
  auto fwd = track_roots(f, there);
  auto back = track_roots(f, there.reversed(), fwd.back());
  REQUIRE(back.back().roots.size() == fwd.front().roots.size());
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(std::abs(back.back().roots[k] - fwd.front().roots[k]) < 1e-6);
  check_bundle_invariants(f, fwd);
  check_bundle_invariants(f, back);
}

TEST_CASE("monodromy loop followed by its reverse is the identity") {
  Polynomial f = parse_poly("0,0,1");
  TauPath loop = make_path(circle_waypoints(4.0, 48), 0.5, {Cx(0, 0), Cx(1, 0)});
  auto fwd = track_roots(f, loop);
  auto back = track_roots(f, loop.reversed(), fwd.back());
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(std::abs(back.back().roots[k] - fwd.front().roots[k]) < 1e-6);
}

TEST_CASE("winding around the obstacle at 1 accumulates in the branch offset") {
  // f = x: the root is z = tau. A counterclockwise loop around 1 winds
  // (1 - z) once around 0, so L = log((1-z)/(-z)) gains 2*pi*i.
  Polynomial f = parse_poly("0,1");
  std::vector<Cx> loop;
  for (Cx w : circle_waypoints(0.5, 64)) loop.push_back(w + 1.0);
  TauPath path = make_path(loop, 0.3, {Cx(0, 0), Cx(1, 0)});
  auto bundles = track_roots(f, path);
  const RootBundle& a = bundles.front();
  const RootBundle& z = bundles.back();
  CHECK(std::abs(z.roots[0] - a.roots[0]) < 1e-9);  // single root returns home
  CHECK(z.branch_offsets[0] == 1);                  // one full counterclockwise turn
  Cx principal = std::log((1.0 - z.roots[0]) / (-z.roots[0]));
  CHECK(std::abs(z.logs[0] - (principal + Cx(0, 2.0 * std::numbers::pi))) < 1e-8);
  check_bundle_invariants(f, bundles);
}

TEST_CASE("continuation overload validates its start bundle") {
  Polynomial f = parse_poly("0,0,1");
  TauPath path = make_path({Cx(4, 0), Cx(2, 0)}, 0.4, {});
  RootBundle b = initial_bundle(f, Cx(4, 0));
  RootBundle wrong_tau = b;
  wrong_tau.tau = Cx(3.9, 0);
  CHECK_THROWS_AS((void)track_roots(f, path, wrong_tau), DomainError);
  RootBundle short_bundle = b;
  short_bundle.roots.pop_back();
  short_bundle.logs.pop_back();
  short_bundle.branch_offsets.pop_back();
  CHECK_THROWS_AS((void)track_roots(f, path, short_bundle), DomainError);
}

TEST_CASE("a root collision on the path is reported as step underflow") {
  // Roots of x^2 = tau collide at tau = 0; drive the path straight through it.
  // (Start at 2, not 1: at tau = 1 a root sits on the log singularity z = 1.)
  Polynomial f = parse_poly("0,0,1");
  TauPath path = make_path({Cx(2, 0), Cx(-2, 0)}, 0.05, {});
  CHECK_THROWS_AS((void)track_roots(f, path), StepUnderflowError);
}

TEST_CASE("tracking rejects degree < 1") {
  TauPath path = make_path({Cx(4, 0), Cx(2, 0)}, 0.4, {});
  CHECK_THROWS_AS((void)track_roots(parse_poly("3"), path), DomainError);
}
