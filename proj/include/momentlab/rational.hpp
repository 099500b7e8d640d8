#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace momentlab {

// Exact rational numbers. GMP's mpq_class keeps the canonical form we rely on
// (denominator > 0, gcd(num, den) = 1), so equality is structural.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// "num/den" with the denominator always spelled out ("0/1", "3/2", "-5/1").
std::string fraction_string(const Rational& q);

// "num" or "num/den", matching the coefficient text grammar.
std::string plain_string(const Rational& q);

// log(x) for x > 0 of arbitrary size, safe far beyond double range.
double log_mpz(const mpz_class& x);
double log_rational_abs(const Rational& q);  // log|q|, -inf for q = 0

// Gaussian rational: the exact complex numbers all moment arithmetic runs on.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r, long i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexRational conj() const { return {re, -im}; }
  Rational abs2() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexRational& operator+=(const ComplexRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& b) { return *this = *this * b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexRational pow(const ComplexRational& c, unsigned long n);

// log|z|, robust for components far outside double range; -inf for z = 0.
double log_abs(const ComplexRational& z);

// arg(z) in (-pi, pi], robust for components far outside double range; 0 for z = 0.
double arg(const ComplexRational& z);

}  // namespace momentlab
