#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "momentlab/polynomial.hpp"

namespace momentlab {

// Exact values of integral_0^1 f(x)^n dx for n = 0..n_max.
struct MomentSequence {
  Polynomial poly;
  std::vector<ComplexRational> values;  // values[n] is the n-th moment

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  const ComplexRational& at(int n) const { return values[static_cast<std::size_t>(n)]; }
};

struct MomentOptions {
  // Abort with ResourceLimitError once any coefficient of f^n exceeds this
  // many bits; exact arithmetic growth is the practical limit here.
  std::size_t coeff_bit_cap = 1'000'000;
};

// Single exact moment, computed independently of any sequence.
ComplexRational moment(const Polynomial& f, int n);

// All moments up to n_max. Computed incrementally (f^{n+1} from f^n) over
// denominator-cleared Gaussian integers; the results are exactly the values
// moment() produces one at a time.
MomentSequence moment_sequence(const Polynomial& f, int n_max, const MomentOptions& opts = {});

// Self-test of the scaling law: moment(c*f, n) == c^n * moment(f, n).
bool scale_law_check(const Polynomial& f, const ComplexRational& c, int n);

// Least n >= from with a non-zero moment (exact test), if any.
std::optional<int> first_nonzero_index(const MomentSequence& seq, int from);

// Dump formats: exact is one "n<TAB>re_num/re_den<TAB>im_num/im_den" record
// per line; csv is a floating "n,re,im,abs,abs_nth_root" table for plotting.
std::string dump_exact(const MomentSequence& seq);
std::string dump_csv(const MomentSequence& seq);

}  // namespace momentlab
