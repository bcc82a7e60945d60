#pragma once

#include <iosfwd>
#include <string>

#include "qpurity/state.hpp"

namespace qpurity {

/// Text state file: header `nqubits=<n>`, then one line per nonzero
/// amplitude `<index-binary> <real> <imag>` with qubit 1 leftmost.
void write_state(std::ostream& out, const StateVector& state);
void write_state_file(const std::string& path, const StateVector& state);

struct StateParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StateVector read_state(std::istream& in);
StateVector read_state_file(const std::string& path);

}  // namespace qpurity
