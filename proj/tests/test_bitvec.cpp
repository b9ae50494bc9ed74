#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "boolrep/bitvec.hpp"

using namespace boolrep;

namespace {

BoolMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BoolMatrix m(rows, cols);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng)) {
        m.set(i, j);
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("bitstrings print coordinate 0 first") {
  BoolVec v = BoolVec::from_string("100");
  CHECK(v.width() == 3);
  CHECK(v.get(0));
  CHECK_FALSE(v.get(1));
  CHECK_FALSE(v.get(2));
  CHECK(v.to_string() == "100");
  CHECK(BoolVec::unit(3, 0) == v);
  CHECK(BoolVec::ones(4).to_string() == "1111");
  CHECK_THROWS_AS(BoolVec::from_string("10x"), InvalidInputError);
}

TEST_CASE("canonical order is popcount then numeric value") {
  std::vector<BoolVec> all;
  for (const char* s : {"00", "10", "01", "11"}) {
    all.push_back(BoolVec::from_string(s));
  }
  std::vector<BoolVec> sorted = all;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  // 10 has numeric value 1 (bit 0 is least significant), 01 has value 2
  CHECK(sorted == all);
  CHECK(canonical_less(BoolVec::from_string("001"), BoolVec::from_string("110")));
}

TEST_CASE("vector algebra") {
  BoolVec a = BoolVec::from_string("1100");
  BoolVec b = BoolVec::from_string("0110");
  CHECK((a | b).to_string() == "1110");
  CHECK((a & b).to_string() == "0100");
  CHECK(a.count() == 2);
  CHECK_FALSE(a.is_zero());
  CHECK(BoolVec(4).is_zero());
  CHECK(BoolVec::from_string("0100").is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(BoolVec::from_string("0011")));
  CHECK_THROWS_AS(a | BoolVec::from_string("10"), InvalidInputError);
}

TEST_CASE("operations cross 64-bit block boundaries") {
  const std::size_t w = 130;
  BoolVec v(w);
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 4);
  CHECK(v.get(129));
  CHECK_FALSE(v.get(128));
  BoolVec u = BoolVec::unit(w, 128);
  CHECK((v | u).count() == 5);
  CHECK(v.is_subset_of(v | u));
  CHECK_FALSE((v & u).intersects(v));
  v.set(63, false);
  CHECK(v.count() == 3);
}

TEST_CASE("row vector times matrix") {
  // rows of X are the images of the unit vectors
  BoolMatrix x = BoolMatrix::from_strings({"110", "011"});
  CHECK(mul(BoolVec::from_string("10"), x).to_string() == "110");
  CHECK(mul(BoolVec::from_string("01"), x).to_string() == "011");
  CHECK(mul(BoolVec::from_string("11"), x).to_string() == "111");
  CHECK(mul(BoolVec::from_string("00"), x).to_string() == "000");
  CHECK_THROWS_AS(mul(BoolVec::from_string("101"), x), InvalidInputError);
}

TEST_CASE("matrix product against direct entry computation") {
  std::mt19937 rng(12345);
  for (int round = 0; round < 50; ++round) {
    BoolMatrix x = random_matrix(rng, 4, 5);
    BoolMatrix y = random_matrix(rng, 5, 3);
    BoolMatrix z = mul(x, y);
    auto zi = mul_integer(x, y);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        int sum = 0;
        for (std::size_t k = 0; k < 5; ++k) {
          sum += (x.get(i, k) && y.get(k, j)) ? 1 : 0;
        }
        CHECK(z.get(i, j) == (sum > 0));
        CHECK(zi[i][j] == sum);
      }
    }
  }
}

TEST_CASE("matrix algebra laws on seeded samples") {
  std::mt19937 rng(99);
  for (int round = 0; round < 30; ++round) {
    BoolMatrix x = random_matrix(rng, 3, 4);
    BoolMatrix y = random_matrix(rng, 4, 4);
    BoolMatrix z = random_matrix(rng, 4, 2);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, BoolMatrix::identity(4)) == x);
    CHECK(mul(BoolMatrix::identity(3), x) == x);
    CHECK(mul(x, y).transpose() == mul(y.transpose(), x.transpose()));
  }
}

TEST_CASE("matrix string round trip and shape errors") {
  std::vector<std::string> rows = {"101", "010"};
  BoolMatrix m = BoolMatrix::from_strings(rows);
  CHECK(m.n_rows() == 2);
  CHECK(m.n_cols() == 3);
  CHECK(m.to_strings() == rows);
  CHECK(m.transpose().to_strings() == std::vector<std::string>{"10", "01", "10"});
  CHECK_THROWS_AS(BoolMatrix::from_strings({"10", "011"}), InvalidInputError);
  CHECK_THROWS_AS(mul(m, m), InvalidInputError);
}
