#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qpurity {

using cplx = std::complex<double>;

constexpr int kMinQubits = 1;
constexpr int kMaxQubits = 14;

/// Normalized pure state of n qubits. Qubit 1 is the most significant
/// bit of the basis-state index, so |q1 q2 ... qn> maps to the integer
/// whose binary expansion reads q1 leftmost.
class StateVector {
 public:
  StateVector(int n, std::vector<cplx> amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  const cplx& amp(std::size_t index) const { return amps_[index]; }

  /// True when the input vector's norm deviated from 1 by more than
  /// 1e-9 and construction had to renormalize it.
  bool renormalized() const { return renormalized_; }

  /// Bit position (shift amount) of qubit label q in a basis index.
  int bit_of(int qubit) const { return n_ - qubit; }

 private:
  int n_;
  std::vector<cplx> amps_;
  bool renormalized_ = false;
};

/// Strictly increasing, nonempty list of qubit labels in 1..n.
class QubitSubset {
 public:
  QubitSubset(std::vector<int> labels, int n);

  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int num_qubits() const { return n_; }
  bool contains(int q) const;

  QubitSubset complement() const;

  /// Subset labels concatenated without separators, e.g. "1278".
  std::string to_string() const;

  /// All size-k subsets of 1..n in lexicographic order.
  static std::vector<QubitSubset> all_of_size(int n, int k);

 private:
  std::vector<int> labels_;
  int n_;
};

StateVector make_state(int n, std::vector<cplx> amplitudes);

/// |0...0> on n qubits.
StateVector product_state(int n);

/// (|0...0> + |1...1>)/sqrt(2).
StateVector ghz_state(int n);

/// The explicit nine-qubit state with averaged balanced purity 1/14:
/// 128 nonzero amplitudes, each +-1/(8*sqrt(2)), stored as a literal
/// (index, sign) table. See zha_state.cpp for the block structure.
StateVector zha_nine_qubit_state();

/// Haar-random pure state: normalized vector of iid standard complex
/// Gaussians. Deterministic for a fixed seed.
StateVector random_state(int n, std::uint64_t seed);

}  // namespace qpurity
