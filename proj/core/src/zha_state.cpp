#include "qpurity/state.hpp"

#include <cmath>

namespace qpurity {
namespace {

// Literal amplitude table for the explicit nine-qubit state: 128 basis
// kets (qubit 1 leftmost in the binary index) with signs; every entry
// carries magnitude 1/(8*sqrt(2)).
//
// The table realizes eight product blocks, each a 4-term Bell-pair
// factor on qubits (1,3)x(2,4) tensored with a 4-term signed pattern on
// a 4-ket subset of qubits 5..9; the four 4-qubit factors are pairwise
// orthogonal and each appears in exactly two blocks, which pins the
// {1,2,3,4} marginal purity at exactly 1/4. The published source this
// table transcribes is internally inconsistent (duplicated and orphaned
// blocks); the completions applied here, chosen to minimize the total
// squared deviation from the published marginal-purity profile over
// every consistent completion of the printed text, are:
//   - of the two printed lines sharing the same 4-qubit factor AND the
//     same 5-qubit support, the first is treated as a corrupted
//     duplicate of the second and dropped;
//   - the orphaned 5-qubit bracket is attached to the fourth 4-qubit
//     factor;
//   - the fourth 4-qubit factor, as printed, is not orthogonal to the
//     third; it is completed to an orthogonal Bell product (sign flip
//     on its middle two kets).
// The three blocks this leaves missing are reconstructed subject to
// block orthogonality, again minimizing deviation from the published
// profile. The resulting marginal spectrum still misses the published
// one — the verification suite reports that mismatch rather than
// hiding it; see README.md.
struct TableEntry {
  std::uint16_t index;
  std::int8_t sign;
};

constexpr TableEntry kTable[128] = {
    {0b000000000, +1},
    {0b000000101, +1},
    {0b000001001, +1},
    {0b000001100, +1},
    {0b000010010, +1},
    {0b000010111, +1},
    {0b000011011, -1},
    {0b000011110, +1},
    {0b000100000, -1},
    {0b000100101, +1},
    {0b000101001, +1},
    {0b000101100, -1},
    {0b000110010, +1},
    {0b000110111, -1},
    {0b000111011, +1},
    {0b000111110, +1},
    {0b001000011, +1},
    {0b001000110, -1},
    {0b001001010, -1},
    {0b001001111, +1},
    {0b001010001, +1},
    {0b001010100, -1},
    {0b001011000, +1},
    {0b001011101, -1},
    {0b001100011, +1},
    {0b001100110, +1},
    {0b001101010, -1},
    {0b001101111, -1},
    {0b001110010, +1},
    {0b001110111, +1},
    {0b001111011, +1},
    {0b001111110, -1},
    {0b010000000, -1},
    {0b010000101, +1},
    {0b010001001, +1},
    {0b010001100, -1},
    {0b010010010, +1},
    {0b010010111, -1},
    {0b010011011, +1},
    {0b010011110, +1},
    {0b010100000, +1},
    {0b010100101, +1},
    {0b010101001, +1},
    {0b010101100, +1},
    {0b010110010, +1},
    {0b010110111, +1},
    {0b010111011, -1},
    {0b010111110, +1},
    {0b011000011, -1},
    {0b011000110, -1},
    {0b011001010, +1},
    {0b011001111, +1},
    {0b011010010, -1},
    {0b011010111, -1},
    {0b011011011, -1},
    {0b011011110, +1},
    {0b011100011, -1},
    {0b011100110, +1},
    {0b011101010, +1},
    {0b011101111, -1},
    {0b011110001, -1},
    {0b011110100, +1},
    {0b011111000, -1},
    {0b011111101, +1},
    {0b100000011, -1},
    {0b100000110, +1},
    {0b100001010, +1},
    {0b100001111, -1},
    {0b100010001, -1},
    {0b100010100, +1},
    {0b100011000, -1},
    {0b100011101, +1},
    {0b100100011, +1},
    {0b100100110, +1},
    {0b100101010, -1},
    {0b100101111, -1},
    {0b100110010, +1},
    {0b100110111, +1},
    {0b100111011, +1},
    {0b100111110, -1},
    {0b101000000, -1},
    {0b101000101, -1},
    {0b101001001, -1},
    {0b101001100, -1},
    {0b101010010, -1},
    {0b101010111, -1},
    {0b101011011, +1},
    {0b101011110, -1},
    {0b101100000, -1},
    {0b101100101, +1},
    {0b101101001, +1},
    {0b101101100, -1},
    {0b101110010, +1},
    {0b101110111, -1},
    {0b101111011, +1},
    {0b101111110, +1},
    {0b110000011, -1},
    {0b110000110, -1},
    {0b110001010, +1},
    {0b110001111, +1},
    {0b110010010, -1},
    {0b110010111, -1},
    {0b110011011, -1},
    {0b110011110, +1},
    {0b110100011, +1},
    {0b110100110, -1},
    {0b110101010, -1},
    {0b110101111, +1},
    {0b110110001, +1},
    {0b110110100, -1},
    {0b110111000, +1},
    {0b110111101, -1},
    {0b111000000, -1},
    {0b111000101, +1},
    {0b111001001, +1},
    {0b111001100, -1},
    {0b111010010, +1},
    {0b111010111, -1},
    {0b111011011, +1},
    {0b111011110, +1},
    {0b111100000, -1},
    {0b111100101, -1},
    {0b111101001, -1},
    {0b111101100, -1},
    {0b111110010, -1},
    {0b111110111, -1},
    {0b111111011, +1},
    {0b111111110, -1},
};

}  // namespace

StateVector zha_nine_qubit_state() {
  std::vector<cplx> amps(512, 0.0);
  const double magnitude = 1.0 / (8.0 * std::sqrt(2.0));
  for (const TableEntry& e : kTable) {
    amps[e.index] = e.sign * magnitude;
  }
  return StateVector(9, std::move(amps));
}

}  // namespace qpurity
