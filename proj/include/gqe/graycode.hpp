#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqe/pauli.hpp"

namespace gqe {

// Binary-reflected Gray code. codewords[a] stores bit b of the printed
// codeword in mask bit b, so bit 0 is the leftmost printed character and
// maps to qubit 0. transitions[a] is the index of the bit flipped between
// codewords a and a+1 (cyclically for a full code).
struct GrayCode {
  int bit_count = 0;
  std::vector<mask_t> codewords;
  std::vector<int> transitions;

  std::string codeword_string(std::size_t index) const;
};

// Reflection construction, built iteratively: append the existing block in
// reverse order with a fresh high bit set. Valid for 1 <= bit_count <= 20.
GrayCode brgc(int bit_count);

// First n codewords with the first n-1 transitions; adjacency still holds
// on the prefix but the wrap-around transition is dropped.
GrayCode truncate(const GrayCode& code, std::size_t n);

}  // namespace gqe
