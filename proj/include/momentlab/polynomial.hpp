#pragma once

#include <complex>
#include <vector>

#include "momentlab/rational.hpp"

namespace momentlab {

// Univariate polynomial with exact Gaussian-rational coefficients,
// stored low-order first and kept trimmed (no trailing zero coefficients).
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ComplexRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(ComplexRational c) {
    return Polynomial{std::vector<ComplexRational>{std::move(c)}};
  }
  // c * x^k
  static Polynomial monomial(int k, ComplexRational c = ComplexRational(1)) {
    std::vector<ComplexRational> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Polynomial{std::move(v)};
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_real() const;

  // Coefficient of x^k; zero outside the stored range.
  const ComplexRational& coeff(int k) const;
  const std::vector<ComplexRational>& coeffs() const { return coeffs_; }

  ComplexRational leading() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const ComplexRational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  std::complex<double> eval(std::complex<double> z) const;
  ComplexRational eval_exact(const ComplexRational& z) const;

  // Coefficient-wise complex conjugate. For real x, conjugate().eval(x)
  // equals the conjugate of eval(x).
  Polynomial conjugate() const;

  std::vector<std::complex<double>> coeffs_double() const;

 private:
  void trim();
  std::vector<ComplexRational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned n);
Polynomial derivative(const Polynomial& p);

// Exact definite integral over [0,1]: sum a_k / (k+1).
ComplexRational integrate_unit(const Polynomial& p);

}  // namespace momentlab
