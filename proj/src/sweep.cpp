#include "momentlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <thread>
#include <utility>

#include "momentlab/errors.hpp"
#include "momentlab/io.hpp"
#include "momentlab/moments.hpp"
#include "momentlab/spectrum.hpp"

namespace momentlab {

namespace {

ConjectureRecord analyze_one(const Polynomial& f, const SweepOptions& opts) {
  ConjectureRecord r;
  r.poly_text = format_poly(f);
  r.degree = f.degree();
  r.seed = opts.generator.seed;
  r.n_max = opts.n_max;
  try {
    if (f.is_zero()) throw DomainError("zero polynomial has no growth rate");

    MomentSequence seq = moment_sequence(f, opts.n_max);
    r.first_nonzero_after = first_nonzero_index(seq, 1);

    int n_lo = std::max(1, opts.n_max / 4);
    GrowthEstimate est;
    try {
      est = estimate_growth(seq, GrowthMethod::SlopeFit, n_lo, opts.n_max);
    } catch (const InsufficientDataError&) {
      // Sparse sequences (many exact-zero moments) still support the
      // coarser max-based estimator.
      est = estimate_growth(seq, GrowthMethod::WindowedRootMax, n_lo, opts.n_max);
    }
    r.estimate = est;

    CriticalSet s = f.degree() == 0 ? constant_critical_set(f) : critical_set(f);
    r.max_modulus_s = s.max_modulus;
    r.s_cardinality = static_cast<int>(s.elements.size());
    r.bound_holds = bound_check(est, s, opts.tol).holds;
    r.conjecture_gap = conjecture_check(est, s, opts.tol).gap;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::vector<ConjectureRecord> sweep_polys(const std::vector<Polynomial>& polys,
                                          const SweepOptions& opts) {
  std::vector<ConjectureRecord> out(polys.size());
  unsigned n_threads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(polys.size(), 1));

  if (n_threads <= 1) {
    for (std::size_t i = 0; i < polys.size(); ++i) out[i] = analyze_one(polys[i], opts);
    return out;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= polys.size()) return;
      out[i] = analyze_one(polys[i], opts);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

std::vector<ConjectureRecord> run_sweep(const SweepOptions& opts) {
  if (opts.n_max < 40) throw DomainError("sweep n_max must be at least 40");
  return sweep_polys(generate_corpus(opts.generator), opts);
}

std::vector<ConjectureRecord> run_sweep(const GeneratorConfig& cfg, int n_max) {
  SweepOptions opts;
  opts.generator = cfg;
  opts.n_max = n_max;
  return run_sweep(opts);
}

std::string record_json(const ConjectureRecord& r) {
  Json j;
  j["poly"] = r.poly_text;
  j["degree"] = r.degree;
  j["estimate"] = r.estimate ? growth_json(*r.estimate) : Json(nullptr);
  j["max_modulus_S"] = r.max_modulus_s;
  j["s_cardinality"] = r.s_cardinality;
  j["bound_holds"] = r.bound_holds;
  j["conjecture_gap"] = r.conjecture_gap;
  j["first_nonzero_after"] =
      r.first_nonzero_after ? Json(*r.first_nonzero_after) : Json(nullptr);
  j["seed"] = r.seed;
  j["n_max"] = r.n_max;
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  return j.dump();
}

std::string records_csv(const std::vector<ConjectureRecord>& records) {
  std::string out =
      "poly,degree,estimate,method,max_modulus_S,s_cardinality,bound_holds,"
      "conjecture_gap,first_nonzero_after,seed,n_max,error\n";
  for (const ConjectureRecord& r : records) {
    out += csv_quote(r.poly_text);
    out += ',';
    out += std::to_string(r.degree);
    out += ',';
    out += r.estimate ? double_text(r.estimate->estimate) : "";
    out += ',';
    out += r.estimate ? method_name(r.estimate->method) : "";
    out += ',';
    out += double_text(r.max_modulus_s);
    out += ',';
    out += std::to_string(r.s_cardinality);
    out += ',';
    out += r.bound_holds ? "true" : "false";
    out += ',';
    out += double_text(r.conjecture_gap);
    out += ',';
    out += r.first_nonzero_after ? std::to_string(*r.first_nonzero_after) : "";
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.n_max);
    out += ',';
    out += r.error.empty() ? "" : csv_quote(r.error);
    out += '\n';
  }
  return out;
}

}  // namespace momentlab
