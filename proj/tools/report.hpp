#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpurity/pauli.hpp"
#include "qpurity/reductions.hpp"
#include "qpurity/uniformity.hpp"

namespace qpurity::tool {

/// Everything one analysis run produces, in stable key order, so the
/// rendered document is diffable and golden-file friendly.
struct AnalysisReport {
  std::string state_descriptor;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<PuritySpectrum> spectra;           // one per requested k
  std::optional<InvariantSummary> invariants;    // sizes 1..4 only
  std::optional<double> pi_me_direct;
  std::optional<double> pi_me_invariant_form;
  std::optional<double> pi_me_floor_form;        // n = 9 only
  std::optional<double> inversion_identity_residual;  // n = 9 only
  std::vector<UniformityVerdict> uniformity;
  std::optional<MmesVerdict> mmes;               // n = 9 only
  double elapsed_seconds = 0.0;
};

/// Decimal at 15 significant digits, plus the nearest small dyadic
/// rational in parentheses when one matches within 1e-9.
std::string format_value(double v);

std::string render_report(const AnalysisReport& report);

/// Write-temp-then-rename so readers never observe a partial document.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace qpurity::tool
