#pragma once

#include <utility>
#include <vector>

#include "qpurity/state.hpp"

namespace qpurity {

/// Hermitian, trace-1 reduced density matrix of a k-qubit marginal,
/// stored dense in row-major order.
class DensityMatrix {
 public:
  DensityMatrix(int k, std::vector<cplx> entries);

  int subsystem_size() const { return k_; }
  std::size_t dim() const { return std::size_t{1} << k_; }
  const cplx& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim() + col];
  }
  const std::vector<cplx>& entries() const { return entries_; }

  double trace_real() const;
  double purity() const;  // Tr(rho^2)
  double hermiticity_defect() const;
  double min_eigenvalue() const;

 private:
  int k_;
  std::vector<cplx> entries_;
};

struct PuritySpectrum {
  int k = 0;
  std::vector<std::pair<QubitSubset, double>> entries;  // lexicographic
};

/// rho_A = Tr_{complement} |psi><psi|. Requires |A| <= n-1.
DensityMatrix reduced_density(const StateVector& state, const QubitSubset& subset);

/// Tr(rho_A^2), computed from the Gram matrix on the smaller side of
/// the bipartition so the large reduced matrix is never materialized.
double purity(const StateVector& state, const QubitSubset& subset);

/// Purities of all C(n,k) size-k marginals.
PuritySpectrum purity_spectrum(const StateVector& state, int k);

/// Mean purity over all balanced bipartitions (subsets of size
/// floor(n/2)); the averaged subsystem purity pi_ME.
double average_balanced_purity(const StateVector& state);

/// Numerically stable pairwise sum.
double pairwise_sum(const std::vector<double>& values);

}  // namespace qpurity
