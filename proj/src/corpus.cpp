#include "momentlab/corpus.hpp"

#include <cctype>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/errors.hpp"

namespace momentlab {

namespace {

// Cursor over the original string. Whitespace is skipped, but offsets reported
// in errors always index into the text as the caller wrote it.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string collect_digits(Cursor& c) {
  std::string out;
  while (!c.eof() && is_digit(c.peek())) out.push_back(c.text[c.pos++]);
  return out;
}

// sign? digits ('/' digits)?
Rational parse_rational(Cursor& c) {
  c.skip_ws();
  bool negative = false;
  if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
    negative = c.peek() == '-';
    ++c.pos;
    c.skip_ws();
  }
  if (c.eof() || !is_digit(c.peek())) {
    throw SyntaxError("expected a digit", c.pos);
  }
  mpz_class num(collect_digits(c), 10);
  mpz_class den(1);
  c.skip_ws();
  if (!c.eof() && c.peek() == '/') {
    ++c.pos;
    c.skip_ws();
    if (c.eof() || !is_digit(c.peek())) {
      throw SyntaxError("expected a digit after '/'", c.pos);
    }
    std::size_t den_at = c.pos;
    den = mpz_class(collect_digits(c), 10);
    if (den == 0) throw SyntaxError("zero denominator", den_at);
  }
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

// R | R+Si | R-Si | Si
ComplexRational parse_coeff(Cursor& c) {
  Rational first = parse_rational(c);
  c.skip_ws();
  if (!c.eof() && c.peek() == 'i') {
    ++c.pos;
    return ComplexRational(Rational(0), std::move(first));
  }
  if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
    Rational second = parse_rational(c);  // consumes the sign itself
    c.skip_ws();
    if (c.eof() || c.peek() != 'i') {
      throw SyntaxError("expected 'i' after imaginary part", c.pos);
    }
    ++c.pos;
    return ComplexRational(std::move(first), std::move(second));
  }
  return ComplexRational(std::move(first));
}

std::string format_coeff(const ComplexRational& c) {
  if (c.im == 0) return plain_string(c.re);
  Rational im_abs = c.im < 0 ? Rational(-c.im) : c.im;
  std::string tail = plain_string(im_abs) + "i";
  if (c.re == 0) return (c.im < 0 ? "-" : "") + tail;
  return plain_string(c.re) + (c.im < 0 ? "-" : "+") + tail;
}

// Uniform in [0, n) by rejection on the raw 64-bit stream, so corpora are
// reproducible across standard libraries for a given seed.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t x = gen();
    if (x < limit) return x % n;
  }
}

long draw_int(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(bounded(gen, static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational draw_rational(std::mt19937_64& gen, const GeneratorConfig& cfg) {
  long num = draw_int(gen, -cfg.numerator_bound, cfg.numerator_bound);
  long den = draw_int(gen, 1, cfg.denominator_bound);
  return make_rational(num, den);
}

}  // namespace

Polynomial parse_poly(const std::string& text) {
  Cursor c{text};
  std::vector<ComplexRational> coeffs;
  coeffs.push_back(parse_coeff(c));
  c.skip_ws();
  while (!c.eof() && c.peek() == ',') {
    ++c.pos;
    coeffs.push_back(parse_coeff(c));
    c.skip_ws();
  }
  if (!c.eof()) throw SyntaxError("unexpected character", c.pos);
  return Polynomial(std::move(coeffs));
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) out.push_back(',');
    out += format_coeff(p.coeff(k));
  }
  return out;
}

std::vector<Polynomial> generate_corpus(const GeneratorConfig& cfg) {
  if (cfg.count < 0) throw DomainError("generator count must be non-negative");
  if (cfg.degree_min < 0 || cfg.degree_max < cfg.degree_min) {
    throw DomainError("generator degree range is invalid");
  }
  if (cfg.numerator_bound < 1 || cfg.denominator_bound < 1) {
    throw DomainError("generator coefficient bounds must be at least 1");
  }

  std::mt19937_64 gen(cfg.seed);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    int d = static_cast<int>(draw_int(gen, cfg.degree_min, cfg.degree_max));
    std::vector<ComplexRational> coeffs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
      Rational re = draw_rational(gen, cfg);
      Rational im = cfg.allow_complex ? draw_rational(gen, cfg) : Rational(0);
      coeffs[static_cast<std::size_t>(k)] = ComplexRational(std::move(re), std::move(im));
    }
    // The leading coefficient must keep the drawn degree.
    while (coeffs.back().is_zero()) {
      Rational re = draw_rational(gen, cfg);
      Rational im = cfg.allow_complex ? draw_rational(gen, cfg) : Rational(0);
      coeffs.back() = ComplexRational(std::move(re), std::move(im));
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace momentlab
