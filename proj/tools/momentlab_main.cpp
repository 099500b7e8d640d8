// momentlab: exact moment sequences of complex polynomials on [0,1], their
// singular sets, analytic continuation of the generating function, and
// growth-rate experiments. Batch-oriented; all output is plain text, JSON,
// JSONL, or CSV on stdout / files named by flags.

#include <chrono>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "momentlab/continuation.hpp"
#include "momentlab/corpus.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/growth.hpp"
#include "momentlab/io.hpp"
#include "momentlab/moments.hpp"
#include "momentlab/path.hpp"
#include "momentlab/spectrum.hpp"
#include "momentlab/sweep.hpp"
#include "momentlab/tracking.hpp"

namespace ml = momentlab;

namespace {

double parse_double(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ml::SyntaxError("expected a number in " + what, 0);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size())
    throw ml::SyntaxError("trailing characters after number in " + what, pos);
  return v;
}

// "re,im", or a bare "re" with zero imaginary part.
std::complex<double> parse_complex_arg(const std::string& text, const std::string& what) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, what), 0.0};
  return {parse_double(text.substr(0, comma), what),
          parse_double(text.substr(comma + 1), what)};
}

std::pair<int, int> parse_int_pair(const std::string& text, const std::string& what) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ml::SyntaxError("expected LO,HI in " + what, text.size());
  auto one = [&](const std::string& part) {
    double v = parse_double(part, what);
    int n = static_cast<int>(v);
    if (static_cast<double>(n) != v)
      throw ml::SyntaxError("expected an integer in " + what, 0);
    return n;
  };
  return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ml::DomainError("cannot open output file: " + path);
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ml::CriticalSet critical_set_any(const ml::Polynomial& f) {
  return f.degree() >= 1 ? ml::critical_set(f) : ml::constant_critical_set(f);
}

// ---- subcommand bodies ----------------------------------------------------

struct MomentsArgs {
  std::string poly;
  int n_max = 0;
  std::string out = "exact";
  std::size_t bit_cap = ml::MomentOptions{}.coeff_bit_cap;
};

void run_moments(const MomentsArgs& a) {
  ml::Polynomial f = ml::parse_poly(a.poly);
  ml::MomentOptions opts;
  opts.coeff_bit_cap = a.bit_cap;
  ml::MomentSequence seq = ml::moment_sequence(f, a.n_max, opts);
  std::cout << (a.out == "csv" ? ml::dump_csv(seq) : ml::dump_exact(seq));
}

struct PolyOnlyArgs {
  std::string poly;
};

void run_critical_set(const PolyOnlyArgs& a) {
  ml::Polynomial f = ml::parse_poly(a.poly);
  std::cout << ml::critical_set_json(ml::critical_set(f)).dump() << "\n";
}

struct GrowthArgs {
  std::string poly;
  int n_max = 200;
  std::string method = "slope";
  std::string window;  // "LO,HI"; empty = [n_max/4, n_max]
};

void run_growth(const GrowthArgs& a) {
  ml::Polynomial f = ml::parse_poly(a.poly);
  ml::GrowthMethod m = ml::GrowthMethod::SlopeFit;
  if (a.method == "rootmax") m = ml::GrowthMethod::WindowedRootMax;
  else if (a.method == "ratio") m = ml::GrowthMethod::RatioSubsequence;
  int lo = std::max(1, a.n_max / 4), hi = a.n_max;
  if (!a.window.empty()) std::tie(lo, hi) = parse_int_pair(a.window, "--window");
  ml::MomentSequence seq = ml::moment_sequence(f, a.n_max);
  std::cout << ml::growth_json(ml::estimate_growth(seq, m, lo, hi)).dump() << "\n";
}

struct EvalFArgs {
  std::string poly;
  std::string t_text;
  std::string method = "series";
  double clearance = 0.0;
  int n_max = 200;
  double margin = 0.05;
  double rel_tol = 1e-10;
};

void run_eval_f(const EvalFArgs& a) {
  ml::Polynomial f = ml::parse_poly(a.poly);
  std::complex<double> t = parse_complex_arg(a.t_text, "--t");
  ml::FValue v;
  if (a.method == "series") {
    v = ml::f_series(f, t, a.n_max, a.margin);
  } else if (a.method == "quadrature") {
    v = ml::f_quadrature(f, t, critical_set_any(f), a.rel_tol);
  } else {
    v = ml::evaluate_pf(f, t, critical_set_any(f), a.clearance);
  }
  std::cout << ml::f_value_json(v).dump() << "\n";
}

struct TraceArgs {
  std::string poly;
  std::string tau_start;
  std::string tau_end;
  std::string dump;  // empty = stdout
  double clearance = 0.0;
};

void run_trace(const TraceArgs& a) {
  ml::Polynomial f = ml::parse_poly(a.poly);
  std::complex<double> t0 = parse_complex_arg(a.tau_start, "--tau-start");
  std::complex<double> t1 = parse_complex_arg(a.tau_end, "--tau-end");
  ml::CriticalSet s = ml::critical_set(f);
  double clearance = a.clearance > 0.0 ? a.clearance : ml::default_clearance(s);
  ml::TauPath path = ml::plan_path(s, t0, t1, clearance);
  std::vector<ml::RootBundle> bundles = ml::track_roots(f, path);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.dump.empty()) {
    file = open_out(a.dump);
    out = &file;
  }
  *out << ml::trace_header(ml::format_poly(f), clearance).dump() << "\n";
  for (const ml::RootBundle& b : bundles) *out << ml::bundle_json(b).dump() << "\n";
  if (!a.dump.empty()) {
    std::cout << "wrote " << bundles.size() << " bundles to " << a.dump << "\n";
  }
}

struct SweepArgs {
  std::uint64_t seed = 0;
  int count = 0;
  std::string degree;  // "min,max"
  int n_max = 0;
  bool complex_coeffs = false;
  std::string out;
  int threads = 0;
  double tol = 0.05;
  long num_bound = 10;
  long den_bound = 4;
};

void run_sweep_cmd(const SweepArgs& a) {
  ml::SweepOptions opts;
  opts.generator.seed = a.seed;
  opts.generator.count = a.count;
  std::tie(opts.generator.degree_min, opts.generator.degree_max) =
      parse_int_pair(a.degree, "--degree");
  opts.generator.allow_complex = a.complex_coeffs;
  opts.generator.numerator_bound = a.num_bound;
  opts.generator.denominator_bound = a.den_bound;
  opts.n_max = a.n_max;
  opts.threads = a.threads;
  opts.tol = a.tol;

  std::vector<ml::ConjectureRecord> records = ml::run_sweep(opts);

  std::ofstream jsonl = open_out(a.out);
  ml::Json header;
  header["generated_at"] = utc_timestamp();  // the only non-deterministic byte
  header["seed"] = a.seed;
  header["count"] = a.count;
  header["degree"] = ml::Json::array({opts.generator.degree_min, opts.generator.degree_max});
  header["n_max"] = a.n_max;
  header["complex"] = a.complex_coeffs;
  header["tol"] = a.tol;
  jsonl << header.dump() << "\n";
  for (const ml::ConjectureRecord& r : records) jsonl << ml::record_json(r) << "\n";

  std::string csv_path = a.out;
  if (csv_path.size() >= 6 && csv_path.substr(csv_path.size() - 6) == ".jsonl")
    csv_path = csv_path.substr(0, csv_path.size() - 6) + ".csv";
  else
    csv_path += ".csv";
  open_out(csv_path) << ml::records_csv(records);

  int ok = 0, failed = 0, bound = 0;
  for (const ml::ConjectureRecord& r : records) {
    if (!r.error.empty()) ++failed;
    else {
      ++ok;
      if (r.bound_holds) ++bound;
    }
  }
  std::cout << "sweep: " << records.size() << " records (" << ok << " ok, " << failed
            << " errors), bound holds on " << bound << "/" << ok << "; report " << a.out
            << ", summary " << csv_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "momentlab: exact moments M_n = ∫_0^1 f(x)^n dx, singular sets, analytic\n"
      "continuation of F(t) = Σ t^n M_n, and growth-rate experiments."};
  app.require_subcommand(1);

  MomentsArgs ma;
  CLI::App* moments = app.add_subcommand("moments", "Exact moment sequence of a polynomial");
  moments->add_option("--poly", ma.poly, "coefficient list a0,a1,...,ad")->required();
  moments->add_option("--n-max", ma.n_max, "highest moment index")->required();
  moments->add_option("--out", ma.out, "output format (default exact)")
      ->check(CLI::IsMember({"exact", "csv"}));
  moments->add_option("--bit-cap", ma.bit_cap,
                      "abort once exact coefficients exceed this many bits");
  moments->callback([&ma] { run_moments(ma); });

  PolyOnlyArgs ca;
  CLI::App* cset = app.add_subcommand(
      "critical-set", "Singular set S: critical values of f plus f(0), f(1), as JSON");
  cset->add_option("--poly", ca.poly, "coefficient list a0,a1,...,ad")->required();
  cset->callback([&ca] { run_critical_set(ca); });

  GrowthArgs ga;
  CLI::App* growth = app.add_subcommand("growth", "Estimate limsup |M_n|^{1/n}");
  growth->add_option("--poly", ga.poly, "coefficient list a0,a1,...,ad")->required();
  growth->add_option("--n-max", ga.n_max, "highest moment index")->required();
  growth->add_option("--method", ga.method, "estimator (default slope)")
      ->check(CLI::IsMember({"slope", "rootmax", "ratio"}));
  growth->add_option("--window", ga.window, "fit window LO,HI (default n_max/4,n_max)");
  growth->callback([&ga] { run_growth(ga); });

  EvalFArgs ea;
  CLI::App* evalf = app.add_subcommand("eval-f", "Evaluate the generating function F(t)");
  evalf->add_option("--poly", ea.poly, "coefficient list a0,a1,...,ad")->required();
  evalf->add_option("--t", ea.t_text, "evaluation point re,im")->required();
  evalf->add_option("--method", ea.method, "series | quadrature | pf (default series)")
      ->check(CLI::IsMember({"series", "quadrature", "pf"}));
  evalf->add_option("--clearance", ea.clearance, "tracking clearance for pf (default auto)");
  evalf->add_option("--n-max", ea.n_max, "series truncation order (default 200)");
  evalf->add_option("--margin", ea.margin, "series convergence margin (default 0.05)");
  evalf->add_option("--rel-tol", ea.rel_tol, "quadrature relative tolerance (default 1e-10)");
  evalf->callback([&ea] { run_eval_f(ea); });

  TraceArgs ta;
  CLI::App* trace = app.add_subcommand(
      "trace", "Track the roots of f(z) = τ along a planned path, as JSONL");
  trace->add_option("--poly", ta.poly, "coefficient list a0,a1,...,ad")->required();
  trace->add_option("--tau-start", ta.tau_start, "path start re,im")->required();
  trace->add_option("--tau-end", ta.tau_end, "path end re,im")->required();
  trace->add_option("--dump", ta.dump, "write JSONL here instead of stdout");
  trace->add_option("--clearance", ta.clearance, "path clearance (default auto)");
  trace->callback([&ta] { run_trace(ta); });

  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Random-corpus growth/bound/conjecture sweep, JSONL + CSV reports");
  sweep->add_option("--seed", sa.seed, "generator seed")->required();
  sweep->add_option("--count", sa.count, "number of polynomials")->required();
  sweep->add_option("--degree", sa.degree, "degree range min,max")->required();
  sweep->add_option("--n-max", sa.n_max, "highest moment index (>= 40)")->required();
  sweep->add_flag("--complex", sa.complex_coeffs, "draw complex coefficients");
  sweep->add_option("--out", sa.out, "JSONL report path")->required();
  sweep->add_option("--threads", sa.threads, "worker threads (default: all cores)");
  sweep->add_option("--tol", sa.tol, "bound/conjecture relative tolerance (default 0.05)");
  sweep->add_option("--num-bound", sa.num_bound, "numerator bound (default 10)");
  sweep->add_option("--den-bound", sa.den_bound, "denominator bound (default 4)");
  sweep->callback([&sa] { run_sweep_cmd(sa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  } catch (const ml::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ml::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ml::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ml::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
