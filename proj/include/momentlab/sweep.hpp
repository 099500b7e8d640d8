#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momentlab/corpus.hpp"
#include "momentlab/growth.hpp"

namespace momentlab {

struct SweepOptions {
  GeneratorConfig generator;
  int n_max = 200;
  int threads = 0;    // 0 = hardware concurrency
  double tol = 0.05;  // relative tolerance for bound/conjecture verdicts
};

// One polynomial's worth of conjecture evidence. A record is emitted for
// every input; failures carry the reason in `error` with the numeric fields
// left at their defaults.
struct ConjectureRecord {
  std::string poly_text;
  int degree = 0;
  std::optional<GrowthEstimate> estimate;
  double max_modulus_s = 0.0;
  int s_cardinality = 0;
  bool bound_holds = false;
  double conjecture_gap = 0.0;                // estimate - max|S|
  std::optional<int> first_nonzero_after;     // least n >= 1 with M_n != 0
  std::uint64_t seed = 0;
  int n_max = 0;
  std::string error;  // empty on success
};

// Analyzes the given polynomials in order; parallel inside, deterministic out.
std::vector<ConjectureRecord> sweep_polys(const std::vector<Polynomial>& polys,
                                          const SweepOptions& opts);

// generate_corpus(opts.generator) + sweep_polys. Requires n_max >= 40 (the
// default estimator window [n_max/4, n_max] needs room for a trustworthy fit).
std::vector<ConjectureRecord> run_sweep(const SweepOptions& opts);
std::vector<ConjectureRecord> run_sweep(const GeneratorConfig& cfg, int n_max);

// One JSON object per record (JSONL body line).
std::string record_json(const ConjectureRecord& r);

// The same records as a CSV table with a header row.
std::string records_csv(const std::vector<ConjectureRecord>& records);

}  // namespace momentlab
