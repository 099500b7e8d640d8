#include "momentlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momentlab {

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string plain_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return fraction_string(q);
}

double log_mpz(const mpz_class& x) {
  signed long exp;
  double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

double log_rational_abs(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

double log_abs(const ComplexRational& z) {
  if (z.is_zero()) return -std::numeric_limits<double>::infinity();
  return 0.5 * log_rational_abs(z.abs2());
}

namespace {

// q as mantissa·2^exp with the mantissa safely inside double range.
double scaled_double(const Rational& q, long& exp) {
  if (q == 0) {
    exp = 0;
    return 0.0;
  }
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  exp = en - ed;
  return mn / md;
}

}  // namespace

double arg(const ComplexRational& z) {
  long er, ei;
  double mr = scaled_double(z.re, er);
  double mi = scaled_double(z.im, ei);
  if (mi == 0.0 && mr == 0.0) return 0.0;
  // rescale both parts by a common power of two before atan2
  long shift = std::max(mr == 0.0 ? ei : er, mi == 0.0 ? er : ei);
  double x = mr == 0.0 ? 0.0 : std::ldexp(mr, static_cast<int>(std::max(er - shift, -2000L)));
  double y = mi == 0.0 ? 0.0 : std::ldexp(mi, static_cast<int>(std::max(ei - shift, -2000L)));
  return std::atan2(y, x);
}

ComplexRational pow(const ComplexRational& c, unsigned long n) {
  ComplexRational acc(1);
  ComplexRational base = c;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const ComplexRational& c) { return c.is_real(); });
}

const ComplexRational& Polynomial::coeff(int k) const {
  static const ComplexRational zero;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

ComplexRational Polynomial::leading() const {
  return coeffs_.empty() ? ComplexRational() : coeffs_.back();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<ComplexRational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); k++) {
    out[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  }
  return Polynomial{std::move(out)};
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<ComplexRational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); k++) {
    out[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
  }
  return Polynomial{std::move(out)};
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<ComplexRational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); i++) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); j++) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial{std::move(out)};
}

Polynomial operator*(const ComplexRational& c, const Polynomial& p) {
  std::vector<ComplexRational> out(p.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); k++) out[k] = c * p.coeffs_[k];
  return Polynomial{std::move(out)};
}

std::complex<double> Polynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + it->to_complex();
  }
  return acc;
}

ComplexRational Polynomial::eval_exact(const ComplexRational& z) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Polynomial Polynomial::conjugate() const {
  std::vector<ComplexRational> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); k++) out[k] = coeffs_[k].conj();
  return Polynomial{std::move(out)};
}

std::vector<std::complex<double>> Polynomial::coeffs_double() const {
  std::vector<std::complex<double>> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); k++) out[k] = coeffs_[k].to_complex();
  return out;
}

Polynomial pow(const Polynomial& p, unsigned n) {
  // Iterated multiplication; exactness does not depend on the order.
  Polynomial acc = Polynomial::constant(ComplexRational(1));
  for (unsigned i = 0; i < n; i++) acc = acc * p;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<ComplexRational> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); k++) {
    out[static_cast<std::size_t>(k - 1)] = ComplexRational(k) * p.coeff(k);
  }
  return Polynomial{std::move(out)};
}

ComplexRational integrate_unit(const Polynomial& p) {
  ComplexRational acc;
  for (int k = 0; k <= p.degree(); k++) {
    Rational inv(1, k + 1);
    inv.canonicalize();
    acc += ComplexRational(inv) * p.coeff(k);
  }
  return acc;
}

}  // namespace momentlab
