#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpurity::tool {
namespace {

constexpr double kDyadicTol = 1e-9;
constexpr int kMaxDyadicExp = 20;

/// If v is within tol of p/2^e for small e, return the reduced
/// fraction as text ("1/16", "3/8", "1").
std::optional<std::string> nearest_dyadic(double v) {
  for (int e = 0; e <= kMaxDyadicExp; ++e) {
    const double scaled = std::ldexp(v, e);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > std::ldexp(kDyadicTol, e)) continue;
    long long num = static_cast<long long>(rounded);
    long long den = 1LL << e;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
      num /= g;
      den /= g;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  return std::nullopt;
}

std::string decimal15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::string format_value(double v) {
  std::string s = decimal15(v);
  if (auto frac = nearest_dyadic(v)) {
    s += " (" + *frac + ")";
  }
  return s;
}

std::string render_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << "analysis_report\n";
  out << "state: " << r.state_descriptor << "\n";
  out << "nqubits: " << r.n << "\n";
  out << "seed: " << r.seed << "\n";

  for (const PuritySpectrum& spec : r.spectra) {
    out << "purity_spectrum k=" << spec.k << ":\n";
    for (const auto& [subset, p] : spec.entries) {
      out << "  " << subset.to_string() << " " << format_value(p) << "\n";
    }
  }

  if (r.invariants) {
    out << "invariants:\n";
    out << "  C1 " << format_value(r.invariants->c1) << "\n";
    out << "  C2 " << format_value(r.invariants->c2) << "\n";
    out << "  C3 " << format_value(r.invariants->c3) << "\n";
    out << "  C4 " << format_value(r.invariants->c4) << "\n";
  }
  if (r.pi_me_direct) {
    out << "pi_me_direct: " << format_value(*r.pi_me_direct) << "\n";
  }
  if (r.pi_me_invariant_form) {
    out << "pi_me_invariant_form: " << format_value(*r.pi_me_invariant_form) << "\n";
  }
  if (r.pi_me_floor_form) {
    out << "pi_me_floor_form: " << format_value(*r.pi_me_floor_form) << "\n";
  }
  if (r.inversion_identity_residual) {
    out << "inversion_identity_residual: "
        << format_value(*r.inversion_identity_residual) << "\n";
  }

  for (const UniformityVerdict& v : r.uniformity) {
    out << "uniformity k=" << v.k << ": " << (v.uniform ? "uniform" : "not-uniform");
    if (v.worst_subset) {
      out << " worst_subset=" << v.worst_subset->to_string()
          << " worst_deviation=" << decimal15(v.worst_deviation);
    }
    out << "\n";
  }

  if (r.mmes) {
    out << "mmes_verdict:\n";
    out << "  pi_me " << format_value(r.mmes->pi_me) << "\n";
    out << "  gap_to_bound " << format_value(r.mmes->gap_to_bound) << "\n";
    out << "  is_mmes " << (r.mmes->is_mmes ? "true" : "false") << "\n";
    out << "  is_ame " << (r.mmes->is_ame ? "true" : "false") << "\n";
    out << "  k4_histogram";
    for (const auto& [value, count] : r.mmes->spectrum_histogram) {
      out << " " << format_value(value) << " x" << count;
    }
    out << "\n";
  }

  out << "elapsed_seconds: " << decimal15(r.elapsed_seconds) << "\n";
  return out.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename failed: " + path);
  }
}

}  // namespace qpurity::tool
