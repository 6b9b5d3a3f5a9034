#include <doctest.h>

#include <bit>
#include <set>

#include "gqe/graycode.hpp"

using namespace gqe;

namespace {

// Recursive reflection definition (block in reversed order, new bit set),
// used as an independent oracle for the iterative construction.
std::vector<std::string> brgc_recursive(int eta) {
  if (eta == 1) return {"0", "1"};
  const auto prev = brgc_recursive(eta - 1);
  std::vector<std::string> out;
  for (const auto& w : prev) out.push_back(w + "0");
  for (auto it = prev.rbegin(); it != prev.rend(); ++it) out.push_back(*it + "1");
  return out;
}

}  // namespace

TEST_CASE("brgc(1) and brgc(3) match the printed sequences") {
  const GrayCode g1 = brgc(1);
  CHECK(g1.codewords == std::vector<mask_t>{0, 1});
  CHECK(g1.transitions == std::vector<int>{0, 0});

  const GrayCode g3 = brgc(3);
  const std::vector<std::string> expected{"000", "100", "110", "010",
                                          "011", "111", "101", "001"};
  REQUIRE(g3.codewords.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(g3.codeword_string(i) == expected[i]);
  CHECK(g3.transitions == std::vector<int>{0, 1, 0, 2, 0, 1, 0, 2});
}

TEST_CASE("brgc matches the recursive reflection definition") {
  for (int eta = 1; eta <= 12; ++eta) {
    const GrayCode code = brgc(eta);
    const auto expected = brgc_recursive(eta);
    REQUIRE(code.codewords.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(code.codeword_string(i) == expected[i]);
    }
  }
}

TEST_CASE("gray code invariants hold exhaustively") {
  for (int eta = 1; eta <= 12; ++eta) {
    const GrayCode code = brgc(eta);
    const std::size_t total = code.codewords.size();
    REQUIRE(total == std::size_t{1} << eta);
    std::set<mask_t> seen;
    for (std::size_t a = 0; a < total; ++a) {
      seen.insert(code.codewords[a]);
      const mask_t diff = code.codewords[a] ^ code.codewords[(a + 1) % total];
      CHECK(std::popcount(diff) == 1);  // adjacency incl. wraparound
      CHECK(std::countr_zero(diff) == code.transitions[a]);
    }
    CHECK(seen.size() == total);                      // all distinct
    CHECK(*seen.rbegin() == total - 1);               // permutation of 0..2^eta-1
  }
}

TEST_CASE("truncate keeps prefixes and adjacency") {
  const GrayCode t3 = truncate(brgc(2), 3);
  CHECK(t3.codewords == std::vector<mask_t>{0b00, 0b01, 0b11});
  CHECK(t3.codeword_string(0) == "00");
  CHECK(t3.codeword_string(1) == "10");
  CHECK(t3.codeword_string(2) == "11");
  CHECK(t3.transitions == std::vector<int>{0, 1});

  const GrayCode full = truncate(brgc(2), 4);
  CHECK(full.codewords == brgc(2).codewords);
  CHECK(full.transitions == brgc(2).transitions);

  const GrayCode t5 = truncate(brgc(3), 5);
  const std::vector<std::string> expected{"000", "100", "110", "010", "011"};
  for (std::size_t i = 0; i < 5; ++i) CHECK(t5.codeword_string(i) == expected[i]);
  CHECK(t5.transitions.size() == 4);
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(brgc(0), std::invalid_argument);
  CHECK_THROWS_AS(brgc(21), std::invalid_argument);
  CHECK_THROWS_AS(truncate(brgc(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(truncate(brgc(2), 5), std::invalid_argument);
}
