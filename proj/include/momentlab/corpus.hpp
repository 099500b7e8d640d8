#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momentlab/polynomial.hpp"

namespace momentlab {

// Parses the coefficient-list grammar "a0,a1,...,ad", where each coefficient
// is R, R+Si, R-Si, or Si with R, S rationals such as "3/2" or "-1".
// Whitespace is ignored. Syntax errors carry the character offset.
Polynomial parse_poly(const std::string& text);

// Inverse of parse_poly; round-trips exactly. The zero polynomial is "0".
std::string format_poly(const Polynomial& p);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int degree_min = 1;
  int degree_max = 5;
  long numerator_bound = 10;   // numerators uniform in [-bound, bound]
  long denominator_bound = 4;  // denominators uniform in [1, bound]
  bool allow_complex = false;
  int count = 0;
};

// `count` non-zero polynomials with degrees in range, deterministic per seed
// (the sampler is pinned, not delegated to distribution implementations).
std::vector<Polynomial> generate_corpus(const GeneratorConfig& cfg);

}  // namespace momentlab
