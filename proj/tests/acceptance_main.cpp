// Acceptance gate: one criterion per section, one [PASS]/[FAIL] line each.
// Exit code is the number of gating failures (criterion 6 is evidence-only).
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "momentlab/continuation.hpp"
#include "momentlab/corpus.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/growth.hpp"
#include "momentlab/moments.hpp"
#include "momentlab/path.hpp"
#include "momentlab/spectrum.hpp"
#include "momentlab/sweep.hpp"
#include "momentlab/tracking.hpp"

using namespace momentlab;
using Cx = std::complex<double>;

namespace {

int g_failures = 0;

// Runs one criterion; the body returns "" on success or a failure message.
// A non-gating criterion reports findings without affecting the exit code.
void criterion(int num, const std::string& name, double time_limit_s, bool gating,
               const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string msg;
  try {
    msg = body();
  } catch (const std::exception& e) {
    msg = std::string("unexpected exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (msg.empty() && time_limit_s > 0.0 && dt > time_limit_s) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "runtime %.1f s exceeds the %.0f s limit", dt, time_limit_s);
    msg = buf;
  }
  const bool pass = msg.empty() || !gating;
  std::printf("[%s] criterion %d: %s — %.2f s%s%s\n", pass ? "PASS" : "FAIL", num, name.c_str(),
              dt, msg.empty() ? "" : (gating ? " — " : " — finding: "),
              msg.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string check_close(Cx a, Cx b, double tol, const std::string& what) {
  if (std::abs(a - b) < tol) return "";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s: |(%g,%g) - (%g,%g)| = %g >= %g", what.c_str(), a.real(),
                a.imag(), b.real(), b.imag(), std::abs(a - b), tol);
  return buf;
}

}  // namespace

int main() {
  // ---------------------------------------------------------------- 1
  criterion(1, "exact moments (f = x and f = constant)", 1.0, true, []() -> std::string {
    const Polynomial x = parse_poly("0,1");
    const MomentSequence seq = moment_sequence(x, 200);
    for (int n = 0; n <= 200; ++n) {
      const ComplexRational expect{make_rational(1, n + 1), Rational(0)};
      if (!(seq.at(n) == expect)) return "moment(x," + std::to_string(n) + ") != 1/(n+1)";
    }
    const ComplexRational c{make_rational(3, 2), make_rational(-1, 3)};
    const Polynomial constant = Polynomial::constant(c);
    const MomentSequence cs = moment_sequence(constant, 200);
    ComplexRational p{Rational(1), Rational(0)};
    for (int n = 0; n <= 200; ++n) {
      if (!(cs.at(n) == p)) return "moment(C," + std::to_string(n) + ") != C^n";
      p *= c;
    }
    return "";
  });

  // ---------------------------------------------------------------- 2
  criterion(2, "scaling law M_n(cf) = c^n M_n(f), 100 random triples", 10.0, true,
            []() -> std::string {
              GeneratorConfig cfg;
              cfg.seed = 2024;
              cfg.count = 100;
              cfg.degree_min = 1;
              cfg.degree_max = 5;
              cfg.allow_complex = true;
              const std::vector<Polynomial> polys = generate_corpus(cfg);
              std::mt19937_64 rng(7321);
              for (std::size_t i = 0; i < polys.size(); ++i) {
                ComplexRational c;
                do {
                  const long nre = static_cast<long>(rng() % 21) - 10;
                  const long nim = static_cast<long>(rng() % 21) - 10;
                  const long dre = 1 + static_cast<long>(rng() % 4);
                  const long dim = 1 + static_cast<long>(rng() % 4);
                  c = ComplexRational{make_rational(nre, dre), make_rational(nim, dim)};
                } while (c.is_zero());
                const int n = 1 + static_cast<int>(rng() % 30);
                if (!scale_law_check(polys[i], c, n))
                  return "scale law failed for " + format_poly(polys[i]) + " at n = " +
                         std::to_string(n);
              }
              return "";
            });

  // ------------------------------------------------------------- 3 & 5
  // One 500-polynomial sweep serves both: the theorem shadow (every f has a
  // non-zero moment past n = 1) and the upper bound (estimate <= max|S|*1.05
  // on every record).
  std::vector<ConjectureRecord> corpus_records;
  criterion(3, "theorem shadow: 500-poly corpus, some M_n != 0 with n >= 1", 300.0, true,
            [&corpus_records]() -> std::string {
              SweepOptions opts;
              opts.n_max = 200;
              opts.tol = 0.05;
              opts.generator.count = 250;
              opts.generator.degree_min = 1;
              opts.generator.degree_max = 5;
              opts.generator.seed = 101;
              opts.generator.allow_complex = false;
              std::vector<ConjectureRecord> recs = run_sweep(opts);
              opts.generator.seed = 202;
              opts.generator.allow_complex = true;
              std::vector<ConjectureRecord> more = run_sweep(opts);
              recs.insert(recs.end(), more.begin(), more.end());
              if (recs.size() != 500) return "expected 500 records";
              for (const ConjectureRecord& r : recs) {
                if (!r.error.empty())
                  return "record for " + r.poly_text + " errored: " + r.error;
                if (!r.first_nonzero_after.has_value())
                  return "no non-zero moment with n >= 1 for " + r.poly_text;
              }
              corpus_records = std::move(recs);
              return "";
            });

  // ---------------------------------------------------------------- 4
  criterion(4, "real case: slope fit within 5% of the sup norm, 50 polys", 300.0, true,
            []() -> std::string {
              GeneratorConfig cfg;
              cfg.seed = 303;
              cfg.count = 50;
              cfg.degree_min = 1;
              cfg.degree_max = 5;
              cfg.allow_complex = false;
              for (const Polynomial& f : generate_corpus(cfg)) {
                const MomentSequence seq = moment_sequence(f, 200);
                const RealCaseResult r = real_case_check(f, seq, 50, 200);
                if (r.gap > 0.05 * r.sup) {
                  char buf[256];
                  std::snprintf(buf, sizeof(buf), "%s: |estimate - sup| = %g > 5%% of sup = %g",
                                format_poly(f).c_str(), r.gap, r.sup);
                  return buf;
                }
              }
              return "";
            });

  // ---------------------------------------------------------------- 5
  criterion(5, "upper bound: estimate <= max|S|*1.05 on all 500 records", 60.0, true,
            [&corpus_records]() -> std::string {
              if (corpus_records.size() != 500) return "corpus sweep unavailable (criterion 3)";
              for (const ConjectureRecord& r : corpus_records) {
                if (!r.estimate.has_value()) return "record without estimate: " + r.poly_text;
                if (!r.bound_holds) {
                  char buf[256];
                  std::snprintf(buf, sizeof(buf), "%s: estimate %g > 1.05 * max|S| = %g",
                                r.poly_text.c_str(), r.estimate->estimate,
                                1.05 * r.max_modulus_s);
                  return buf;
                }
              }
              return "";
            });

  // ---------------------------------------------------------------- 6
  criterion(6, "conjecture evidence on the named polynomials (non-gating)", 120.0, false,
            []() -> std::string {
              const char* polys[] = {"0,1",  "-1/2,1",   "0,1,-1", "0,0,1",
                                     "0,0,-1,1", "0,3", "1/2,1i"};
              std::string findings;
              for (const char* text : polys) {
                const Polynomial f = parse_poly(text);
                const MomentSequence seq = moment_sequence(f, 200);
                const GrowthEstimate est =
                    estimate_growth(seq, GrowthMethod::SlopeFit, 50, 200);
                const CriticalSet s = critical_set(f);
                const ConjectureCheck c = conjecture_check(est, s, 0.05);
                if (!c.equal_within) {
                  char buf[256];
                  std::snprintf(buf, sizeof(buf), "%s: |estimate - max|S|| = %g (max|S| = %g); ",
                                text, std::abs(c.gap), s.max_modulus);
                  findings += buf;
                }
              }
              return findings;
            });

  // ---------------------------------------------------------------- 7
  criterion(7, "cross-method agreement of F on 50 random (f, t)", 120.0, true,
            []() -> std::string {
              GeneratorConfig cfg;
              cfg.seed = 404;
              cfg.count = 50;
              cfg.degree_min = 1;
              cfg.degree_max = 5;
              cfg.allow_complex = true;
              std::mt19937_64 rng(9001);
              std::uniform_real_distribution<double> unit(0.0, 1.0);
              for (const Polynomial& f : generate_corpus(cfg)) {
                const double m = sup_norm(f).value;
                const double t_abs = (0.05 + 0.45 * unit(rng)) / m;
                const Cx t = std::polar(t_abs, 2.0 * M_PI * unit(rng));
                const CriticalSet s = critical_set(f);
                const MomentSequence seq = moment_sequence(f, 200);

                const FValue a = f_series(f, seq, t);
                const FValue b = f_quadrature(f, t, s);
                const FValue c = evaluate_pf(f, t, s);
                std::string err;
                err = check_close(a.value, b.value, 1e-6, format_poly(f) + " series vs quad");
                if (!err.empty()) return err;
                err = check_close(a.value, c.value, 1e-6, format_poly(f) + " series vs pf");
                if (!err.empty()) return err;
                err = check_close(b.value, c.value, 1e-6, format_poly(f) + " quad vs pf");
                if (!err.empty()) return err;

                const FValue zero = f_series(f, seq, Cx(0, 0));
                if (!(zero.value == Cx(1.0, 0.0)))
                  return "F(0) != 1 exactly for " + format_poly(f);
              }
              return "";
            });

  // ---------------------------------------------------------------- 8
  criterion(8, "asymptotic decay of F along direction 1 up to |t| = 10^4", 120.0, true,
            []() -> std::string {
              const Polynomial f = parse_poly("0,1");
              const std::vector<double> mags = {10.0, 100.0, 1000.0, 10000.0};
              const std::vector<DecayRow> rows = decay_probe(f, Cx(1, 0), mags);
              if (rows.size() != mags.size()) return "probe row count mismatch";
              for (const DecayRow& r : rows) {
                if (!(r.scaled <= 2.0)) {
                  char buf[128];
                  std::snprintf(buf, sizeof(buf), "scaled |F| = %g > 2.0 at |t| = %g", r.scaled,
                                r.t_abs);
                  return buf;
                }
              }
              // closed form -log(1-t)/t (principal branch) vs partial fractions
              const CriticalSet s = critical_set(f);
              for (double m : mags) {
                const Cx t(m, 0.0);
                const FValue v = evaluate_pf(f, t, s);
                const Cx oracle = -std::log(Cx(1.0, 0.0) - t) / t;
                const std::string err =
                    check_close(v.value, oracle, 1e-6, "pf vs -log(1-t)/t at |t|=" +
                                                           std::to_string(static_cast<int>(m)));
                if (!err.empty()) return err;
              }
              return "";
            });

  // ---------------------------------------------------------------- 9
  criterion(9, "multiplicity exponents via shrink-path slopes", 60.0, true, []() -> std::string {
    struct Case {
      const char* text;
      int n_mult;
      Cx direction;
      double expect, tol;
    };
    const Case cases[] = {
        {"0,1", 1, Cx(-1, 0), 1.0, 0.05},       // S = {0, 1}: shrink along -1
        {"0,0,1", 2, Cx(-1, 0), 0.5, 0.05},     // S = {0, 1}
        {"0,0,-1,1", 2, Cx(1, 0), 0.5, 0.10},   // S = {0, -4/27}: shrink along +1
    };
    for (const Case& c : cases) {
      const Polynomial f = parse_poly(c.text);
      const CriticalSet s = critical_set(f);
      const TauPath path = plan_shrink_path(f, s, c.direction, 1e-5);
      const double slope = multiplicity_slope(f, Cx(0, 0), c.n_mult, path);
      if (std::abs(slope - c.expect) > c.tol) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: slope %g not within %g of %g", c.text, slope, c.tol,
                      c.expect);
        return buf;
      }
    }
    return "";
  });

  // ---------------------------------------------------------------- 10
  criterion(10, "monodromy: loop swap for x^2 and reversal identity", 60.0, true,
            []() -> std::string {
              const Polynomial f2 = parse_poly("0,0,1");
              std::vector<Cx> loop;
              for (int k = 0; k <= 64; ++k) {
                const double th = 2.0 * M_PI * k / 64.0;
                loop.push_back(Cx(4.0 * std::cos(th), 4.0 * std::sin(th)));
              }
              const TauPath path = make_path(loop, 0.5, {Cx(0, 0), Cx(1, 0)});
              const std::vector<RootBundle> bundles = track_roots(f2, path);
              const RootBundle& a = bundles.front();
              const RootBundle& z = bundles.back();
              if (std::abs(z.roots[0] - a.roots[1]) > 1e-6 ||
                  std::abs(z.roots[1] - a.roots[0]) > 1e-6)
                return "loop around tau = 0 did not swap the roots of x^2";

              // forward-then-reverse returns every root home
              const Polynomial f3 = parse_poly("1/2,-1,0,1");
              const TauPath fwd = make_path({Cx(6, 0), Cx(6, 5), Cx(-6, 5), Cx(-6, 0)}, 0.4, {});
              const std::vector<RootBundle> there = track_roots(f3, fwd);
              const TauPath back = fwd.reversed();
              const std::vector<RootBundle> again = track_roots(f3, back, there.back());
              const RootBundle& home = again.back();
              for (std::size_t k = 0; k < home.roots.size(); ++k)
                if (std::abs(home.roots[k] - there.front().roots[k]) > 1e-6)
                  return "reversal did not return root " + std::to_string(k) + " home";
              return "";
            });

  if (g_failures == 0) std::printf("acceptance: all gating criteria passed\n");
  else std::printf("acceptance: %d gating criterion(s) failed\n", g_failures);
  return g_failures;
}
