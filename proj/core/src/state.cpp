#include "qpurity/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qpurity {

StateVector::StateVector(int n, std::vector<cplx> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (n < kMinQubits || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
  if (amps_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  double norm_sq = 0.0;
  for (const cplx& a : amps_) norm_sq += std::norm(a);
  if (norm_sq <= 0.0) {
    throw std::invalid_argument("amplitude vector is zero");
  }
  const double norm = std::sqrt(norm_sq);
  renormalized_ = std::abs(norm - 1.0) > 1e-9;
  for (cplx& a : amps_) a /= norm;
}

QubitSubset::QubitSubset(std::vector<int> labels, int n)
    : labels_(std::move(labels)), n_(n) {
  if (labels_.empty()) throw std::invalid_argument("empty qubit subset");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1 || labels_[i] > n_) {
      throw std::invalid_argument("qubit label out of range");
    }
    if (i > 0 && labels_[i] <= labels_[i - 1]) {
      throw std::invalid_argument("qubit labels must be strictly increasing");
    }
  }
}

bool QubitSubset::contains(int q) const {
  return std::binary_search(labels_.begin(), labels_.end(), q);
}

QubitSubset QubitSubset::complement() const {
  std::vector<int> rest;
  for (int q = 1; q <= n_; ++q) {
    if (!contains(q)) rest.push_back(q);
  }
  return QubitSubset(std::move(rest), n_);
}

std::string QubitSubset::to_string() const {
  std::string s;
  for (int q : labels_) s += std::to_string(q);
  return s;
}

std::vector<QubitSubset> QubitSubset::all_of_size(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  std::vector<QubitSubset> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

StateVector make_state(int n, std::vector<cplx> amplitudes) {
  return StateVector(n, std::move(amplitudes));
}

StateVector product_state(int n) {
  if (n < 2) throw std::invalid_argument("product_state needs n >= 2");
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  amps[0] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state needs n >= 2");
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  const double w = 1.0 / std::sqrt(2.0);
  amps[0] = w;
  amps[amps.size() - 1] = w;
  return StateVector(n, std::move(amps));
}

StateVector random_state(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_state needs n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(std::size_t{1} << n);
  for (cplx& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = cplx(re, im);
  }
  return StateVector(n, std::move(amps));
}

}  // namespace qpurity
