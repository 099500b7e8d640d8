#include "momentlab/moments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {

struct GaussianInt {
  mpz_class re, im;
};

std::size_t bit_size(const GaussianInt& g) {
  return std::max(mpz_sizeinbase(g.re.get_mpz_t(), 2), mpz_sizeinbase(g.im.get_mpz_t(), 2));
}

// f cleared of denominators: g = D * f with Gaussian-integer coefficients.
struct ClearedPoly {
  std::vector<GaussianInt> coeffs;
  mpz_class scale;  // D
};

ClearedPoly clear_denominators(const Polynomial& f) {
  ClearedPoly out;
  out.scale = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.im.get_den().get_mpz_t());
  }
  out.coeffs.resize(f.coeffs().size());
  for (std::size_t k = 0; k < out.coeffs.size(); k++) {
    const auto& c = f.coeffs()[k];
    out.coeffs[k].re = c.re.get_num() * (out.scale / c.re.get_den());
    out.coeffs[k].im = c.im.get_num() * (out.scale / c.im.get_den());
  }
  return out;
}

std::vector<GaussianInt> convolve(const std::vector<GaussianInt>& a,
                                  const std::vector<GaussianInt>& b) {
  std::vector<GaussianInt> out(a.size() + b.size() - 1);
  mpz_class t;
  for (std::size_t i = 0; i < a.size(); i++) {
    if (a[i].re == 0 && a[i].im == 0) continue;
    for (std::size_t j = 0; j < b.size(); j++) {
      GaussianInt& o = out[i + j];
      t = a[i].re * b[j].re;
      o.re += t;
      t = a[i].im * b[j].im;
      o.re -= t;
      t = a[i].re * b[j].im;
      o.im += t;
      t = a[i].im * b[j].re;
      o.im += t;
    }
  }
  return out;
}

// Exact integral over [0,1] of a Gaussian-integer polynomial divided by D^n.
ComplexRational assemble_moment(const std::vector<GaussianInt>& p, const mpz_class& denom_pow,
                                const std::vector<mpz_class>& lcm_table) {
  const mpz_class& L = lcm_table[p.size()];
  mpz_class sre = 0, sim = 0, w;
  for (std::size_t k = 0; k < p.size(); k++) {
    mpz_divexact_ui(w.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(k + 1));
    sre += p[k].re * w;
    sim += p[k].im * w;
  }
  mpz_class den = denom_pow * L;
  Rational re(sre, den), im(sim, den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

std::vector<mpz_class> make_lcm_table(std::size_t up_to) {
  std::vector<mpz_class> t(up_to + 1);
  t[0] = 1;
  if (up_to >= 1) t[1] = 1;
  for (std::size_t k = 2; k <= up_to; k++) {
    mpz_lcm_ui(t[k].get_mpz_t(), t[k - 1].get_mpz_t(), static_cast<unsigned long>(k));
  }
  return t;
}

}  // namespace

ComplexRational moment(const Polynomial& f, int n) {
  if (n < 0) throw DomainError("moment: n must be non-negative");
  return integrate_unit(pow(f, static_cast<unsigned>(n)));
}

MomentSequence moment_sequence(const Polynomial& f, int n_max, const MomentOptions& opts) {
  if (n_max < 1) throw DomainError("moment_sequence: n_max must be >= 1");
  MomentSequence seq;
  seq.poly = f;
  seq.values.resize(static_cast<std::size_t>(n_max) + 1);
  seq.values[0] = ComplexRational(1);

  if (f.is_zero()) {
    return seq;  // all higher moments are zero
  }

  const ClearedPoly g = clear_denominators(f);
  const std::size_t deg = g.coeffs.size() - 1;
  const auto lcm_table = make_lcm_table(deg * static_cast<std::size_t>(n_max) + 1);

  std::vector<GaussianInt> power(1);
  power[0].re = 1;
  mpz_class denom_pow = 1;
  for (int n = 1; n <= n_max; n++) {
    power = convolve(power, g.coeffs);
    denom_pow *= g.scale;
    for (const auto& c : power) {
      if (bit_size(c) > opts.coeff_bit_cap) {
        throw ResourceLimitError("moment_sequence: coefficient bit-size cap exceeded at n = " +
                                 std::to_string(n));
      }
    }
    seq.values[static_cast<std::size_t>(n)] = assemble_moment(power, denom_pow, lcm_table);
  }
  return seq;
}

bool scale_law_check(const Polynomial& f, const ComplexRational& c, int n) {
  const ComplexRational lhs = moment(Polynomial::constant(c) * f, n);
  const ComplexRational rhs = pow(c, static_cast<unsigned long>(n)) * moment(f, n);
  return lhs == rhs;
}

std::optional<int> first_nonzero_index(const MomentSequence& seq, int from) {
  if (from < 0) from = 0;
  for (int n = from; n <= seq.n_max(); n++) {
    if (!seq.at(n).is_zero()) return n;
  }
  return std::nullopt;
}

std::string dump_exact(const MomentSequence& seq) {
  std::string out;
  for (int n = 0; n <= seq.n_max(); n++) {
    const auto& m = seq.at(n);
    out += std::to_string(n) + "\t" + fraction_string(m.re) + "\t" + fraction_string(m.im) + "\n";
  }
  return out;
}

std::string dump_csv(const MomentSequence& seq) {
  std::string out = "n,re,im,abs,abs_nth_root\n";
  char buf[128];
  for (int n = 0; n <= seq.n_max(); n++) {
    const auto& m = seq.at(n);
    const double la = log_abs(m);  // -inf for exact zero
    const double abs = std::exp(la);
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,", n, to_double(m.re), to_double(m.im),
                  abs);
    out += buf;
    if (n >= 1) {
      std::snprintf(buf, sizeof(buf), "%.17g", std::exp(la / n));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace momentlab
