#include "qpurity/state_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace qpurity {
namespace {

std::string index_to_binary(std::size_t index, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1) s[q] = '1';
  }
  return s;
}

}  // namespace

void write_state(std::ostream& out, const StateVector& state) {
  const int n = state.num_qubits();
  out << "nqubits=" << n << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const cplx& a = state.amp(i);
    if (a == 0.0) continue;
    out << index_to_binary(i, n) << " " << a.real() << " " << a.imag() << "\n";
  }
}

void write_state_file(const std::string& path, const StateVector& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_state(out, state);
  if (!out) throw std::runtime_error("write failed: " + path);
}

StateVector read_state(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw StateParseError("empty state file");
  }
  if (line.rfind("nqubits=", 0) != 0) {
    throw StateParseError("missing nqubits= header");
  }
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(line.substr(8), &pos);
    if (pos != line.size() - 8) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw StateParseError("malformed qubit count: " + line);
  }
  if (n < kMinQubits || n > kMaxQubits) {
    throw StateParseError("qubit count out of range: " + std::to_string(n));
  }

  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string bits;
    double re = 0.0, im = 0.0;
    if (!(row >> bits >> re >> im)) {
      throw StateParseError("malformed amplitude line " + std::to_string(lineno));
    }
    std::string rest;
    if (row >> rest) {
      throw StateParseError("trailing tokens on line " + std::to_string(lineno));
    }
    if (bits.size() != static_cast<std::size_t>(n)) {
      throw StateParseError("index width mismatch on line " + std::to_string(lineno));
    }
    std::size_t index = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw StateParseError("non-binary index on line " + std::to_string(lineno));
      }
      index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    amps[index] = cplx(re, im);
  }
  double norm_sq = 0.0;
  for (const cplx& a : amps) norm_sq += std::norm(a);
  if (norm_sq <= 0.0) throw StateParseError("state file has zero norm");
  return StateVector(n, std::move(amps));
}

StateVector read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  return read_state(in);
}

}  // namespace qpurity
