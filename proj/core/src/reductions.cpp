#include "qpurity/reductions.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qpurity {
namespace {

// Scatter the bits of `packed` (bit k-1-i of packed -> labels[i]) into
// a full n-qubit basis index.
std::size_t scatter_bits(std::size_t packed, const std::vector<int>& labels, int n) {
  std::size_t idx = 0;
  const int k = static_cast<int>(labels.size());
  for (int i = 0; i < k; ++i) {
    if ((packed >> (k - 1 - i)) & 1) {
      idx |= std::size_t{1} << (n - labels[i]);
    }
  }
  return idx;
}

}  // namespace

DensityMatrix::DensityMatrix(int k, std::vector<cplx> entries)
    : k_(k), entries_(std::move(entries)) {
  const std::size_t d = std::size_t{1} << k_;
  if (entries_.size() != d * d) {
    throw std::invalid_argument("density matrix entry count must be 4^k");
  }
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (const cplx& e : entries_) s += std::norm(e);
  return s;
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) {
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix reduced_density(const StateVector& state, const QubitSubset& subset) {
  const int n = state.num_qubits();
  if (subset.num_qubits() != n) throw std::invalid_argument("subset/state qubit count mismatch");
  if (subset.size() >= n) {
    throw std::invalid_argument("subset must leave at least one qubit to trace out");
  }
  const auto& keep = subset.labels();
  const auto rest = subset.complement().labels();
  const std::size_t da = std::size_t{1} << keep.size();
  const std::size_t db = std::size_t{1} << rest.size();

  std::vector<cplx> rho(da * da, 0.0);
  for (std::size_t b = 0; b < db; ++b) {
    const std::size_t base = scatter_bits(b, rest, n);
    for (std::size_t a = 0; a < da; ++a) {
      const cplx psi_a = state.amp(base | scatter_bits(a, keep, n));
      if (psi_a == 0.0) continue;
      for (std::size_t a2 = 0; a2 < da; ++a2) {
        rho[a * da + a2] += psi_a * std::conj(state.amp(base | scatter_bits(a2, keep, n)));
      }
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

double purity(const StateVector& state, const QubitSubset& subset) {
  const int n = state.num_qubits();
  if (subset.num_qubits() != n) throw std::invalid_argument("subset/state qubit count mismatch");
  if (subset.size() >= n) {
    throw std::invalid_argument("subset must leave at least one qubit to trace out");
  }
  // Tr((M M^+)^2) = Tr((M^+ M)^2): form the Gram matrix on whichever
  // side of the bipartition is smaller.
  const auto& keep = subset.labels();
  const auto rest = subset.complement().labels();
  const bool keep_small = keep.size() <= rest.size();
  const auto& rows = keep_small ? keep : rest;
  const auto& cols = keep_small ? rest : keep;
  const std::size_t dr = std::size_t{1} << rows.size();
  const std::size_t dc = std::size_t{1} << cols.size();

  std::vector<std::size_t> row_idx(dr), col_idx(dc);
  for (std::size_t r = 0; r < dr; ++r) row_idx[r] = scatter_bits(r, rows, n);
  for (std::size_t c = 0; c < dc; ++c) col_idx[c] = scatter_bits(c, cols, n);

  double sum = 0.0;
  for (std::size_t r = 0; r < dr; ++r) {
    for (std::size_t r2 = 0; r2 < dr; ++r2) {
      cplx g = 0.0;
      for (std::size_t c = 0; c < dc; ++c) {
        g += state.amp(row_idx[r] | col_idx[c]) * std::conj(state.amp(row_idx[r2] | col_idx[c]));
      }
      sum += std::norm(g);
    }
  }
  return sum;
}

PuritySpectrum purity_spectrum(const StateVector& state, int k) {
  const int n = state.num_qubits();
  if (k < 1 || k > n - 1) throw std::invalid_argument("marginal size out of range");
  PuritySpectrum spec;
  spec.k = k;
  for (const QubitSubset& s : QubitSubset::all_of_size(n, k)) {
    spec.entries.emplace_back(s, purity(state, s));
  }
  return spec;
}

double average_balanced_purity(const StateVector& state) {
  const int n = state.num_qubits();
  const int half = n / 2;
  std::vector<double> purities;
  for (const QubitSubset& s : QubitSubset::all_of_size(n, half)) {
    purities.push_back(purity(state, s));
  }
  return pairwise_sum(purities) / static_cast<double>(purities.size());
}

double pairwise_sum(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  std::vector<double> cur = values;
  while (cur.size() > 1) {
    std::vector<double> next((cur.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < cur.size(); i += 2) next[i / 2] = cur[i] + cur[i + 1];
    if (cur.size() % 2 == 1) next.back() = cur.back();
    cur = std::move(next);
  }
  return cur[0];
}

}  // namespace qpurity
