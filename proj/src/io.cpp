#include "momentlab/io.hpp"

#include <charconv>
#include <complex>
#include <system_error>

namespace momentlab {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

std::string kind_name(PointKind k) {
  switch (k) {
    case PointKind::Endpoint0: return "endpoint-0";
    case PointKind::Endpoint1: return "endpoint-1";
    case PointKind::CriticalValue: return "critical-value";
  }
  return "unknown";
}

std::string method_name(FMethod m) {
  switch (m) {
    case FMethod::Series: return "series";
    case FMethod::Quadrature: return "quadrature";
    case FMethod::PartialFraction: return "partial-fraction";
  }
  return "unknown";
}

std::string method_name(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::SlopeFit: return "slope-fit";
    case GrowthMethod::WindowedRootMax: return "windowed-root-max";
    case GrowthMethod::RatioSubsequence: return "ratio-subsequence";
  }
  return "unknown";
}

std::string double_text(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Json critical_set_json(const CriticalSet& s) {
  Json elements = Json::array();
  for (const CriticalPoint& p : s.elements) {
    Json kinds = Json::array();
    for (PointKind k : p.kinds) kinds.push_back(kind_name(k));
    elements.push_back(Json{{"re", p.value.real()},
                            {"im", p.value.imag()},
                            {"radius", p.radius},
                            {"kinds", kinds}});
  }
  return Json{{"elements", elements}, {"max_modulus", s.max_modulus}};
}

Json f_value_json(const FValue& v) {
  return Json{{"t", complex_json(v.t)},
              {"value", complex_json(v.value)},
              {"method", method_name(v.method)},
              {"error_estimate", v.error_estimate}};
}

Json growth_json(const GrowthEstimate& g) {
  return Json{{"estimate", g.estimate},
              {"method", method_name(g.method)},
              {"window", Json::array({g.n_lo, g.n_hi})},
              {"nonzero_count", g.nonzero_count},
              {"diagnostics", g.diagnostics}};
}

Json bundle_json(const RootBundle& b) {
  Json roots = Json::array();
  Json logs = Json::array();
  Json offsets = Json::array();
  for (std::size_t k = 0; k < b.roots.size(); ++k) {
    roots.push_back(complex_json(b.roots[k]));
    logs.push_back(complex_json(b.logs[k]));
    offsets.push_back(b.branch_offsets[k]);
  }
  return Json{{"tau", complex_json(b.tau)},
              {"roots", roots},
              {"logs", logs},
              {"branch_offsets", offsets}};
}

Json trace_header(const std::string& poly_text, double clearance) {
  return Json{{"poly", poly_text},
              {"clearance", clearance},
              {"detour_convention", "counterclockwise"}};
}

}  // namespace momentlab
