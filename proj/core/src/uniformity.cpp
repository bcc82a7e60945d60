#include "qpurity/uniformity.hpp"

#include <cmath>
#include <stdexcept>

namespace qpurity {

UniformityVerdict is_k_uniform(const StateVector& state, int k, double tol) {
  const int n = state.num_qubits();
  if (k < 1 || k > n / 2) {
    throw std::invalid_argument("uniformity order must be in 1..floor(n/2)");
  }
  UniformityVerdict v;
  v.k = k;
  const double target = std::ldexp(1.0, -k);  // 2^-k
  for (const QubitSubset& s : QubitSubset::all_of_size(n, k)) {
    const double dev = std::abs(purity(state, s) - target);
    if (dev > v.worst_deviation) {
      v.worst_deviation = dev;
      v.worst_subset = s;
    }
  }
  v.uniform = v.worst_deviation <= tol;
  if (v.uniform && v.worst_subset) {
    // Purity 2^-k already pins rho = I/2^k; cross-check the worst
    // subset entrywise.
    const DensityMatrix rho = reduced_density(state, *v.worst_subset);
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        const double want = (r == c) ? target : 0.0;
        if (std::abs(rho.at(r, c) - want) > 1e-6) {
          v.uniform = false;
          v.worst_deviation = std::abs(rho.at(r, c) - want);
        }
      }
    }
  }
  return v;
}

std::map<double, int> classify_marginals(const StateVector& state, int k,
                                         double bucket_tol) {
  const int n = state.num_qubits();
  if (k < 1 || k > n - 1) throw std::invalid_argument("marginal size out of range");
  std::map<double, int> hist;
  for (const auto& [subset, p] : purity_spectrum(state, k).entries) {
    auto it = hist.lower_bound(p - bucket_tol);
    if (it != hist.end() && std::abs(it->first - p) <= bucket_tol) {
      ++it->second;
    } else {
      hist[p] = 1;
    }
  }
  return hist;
}

MmesVerdict mmes_verdict(const StateVector& state, double tol) {
  if (state.num_qubits() != 9) {
    throw std::invalid_argument("MMES criterion constants are specific to n = 9");
  }
  MmesVerdict v;
  v.pi_me = average_balanced_purity(state);
  v.gap_to_bound = v.pi_me - kNineQubitPurityFloor;
  v.is_mmes = std::abs(v.gap_to_bound) <= tol;
  v.spectrum_histogram = classify_marginals(state, 4);

  v.is_ame = true;
  for (const auto& [subset, p] : purity_spectrum(state, 4).entries) {
    if (std::abs(p - 1.0 / 16.0) > tol) {
      v.is_ame = false;
      break;
    }
  }
  return v;
}

}  // namespace qpurity
