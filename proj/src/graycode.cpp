#include "gqe/graycode.hpp"

#include <bit>
#include <stdexcept>

namespace gqe {

std::string GrayCode::codeword_string(std::size_t index) const {
  std::string s(bit_count, '0');
  for (int b = 0; b < bit_count; ++b) {
    if ((codewords[index] >> b) & 1) s[b] = '1';
  }
  return s;
}

GrayCode brgc(int bit_count) {
  if (bit_count < 1 || bit_count > 20) {
    throw std::invalid_argument("brgc: bit_count must be in [1, 20]");
  }
  GrayCode code;
  code.bit_count = bit_count;
  code.codewords = {0, 1};
  for (int b = 1; b < bit_count; ++b) {
    const std::size_t size = code.codewords.size();
    code.codewords.reserve(2 * size);
    for (std::size_t i = 0; i < size; ++i) {
      code.codewords.push_back(code.codewords[size - 1 - i] |
                               (mask_t{1} << b));
    }
  }
  const std::size_t total = code.codewords.size();
  code.transitions.resize(total);
  for (std::size_t a = 0; a < total; ++a) {
    const mask_t diff = code.codewords[a] ^ code.codewords[(a + 1) % total];
    code.transitions[a] = std::countr_zero(diff);
  }
  return code;
}

GrayCode truncate(const GrayCode& code, std::size_t n) {
  if (n < 1 || n > code.codewords.size()) {
    throw std::invalid_argument("truncate: n out of range");
  }
  if (n == code.codewords.size()) return code;
  GrayCode out;
  out.bit_count = code.bit_count;
  out.codewords.assign(code.codewords.begin(), code.codewords.begin() + n);
  out.transitions.assign(code.transitions.begin(),
                         code.transitions.begin() + (n - 1));
  return out;
}

}  // namespace gqe
