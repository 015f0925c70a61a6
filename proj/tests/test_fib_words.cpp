#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fibthermo/fib_words.hpp"

using namespace fibthermo;
using namespace fibthermo::words;

TEST_CASE("fib_number follows the F0=1, F1=2 indexing") {
  CHECK(fib_number(0) == 1);
  CHECK(fib_number(1) == 2);
  CHECK(fib_number(2) == 3);
  CHECK(fib_number(3) == 5);
  CHECK(fib_number(4) == 8);
  CHECK(fib_number(5) == 13);
  CHECK_THROWS_AS(fib_number(-1), std::invalid_argument);
}

TEST_CASE("fib_number reports overflow instead of wrapping") {
  CHECK(fib_number(91) > fib_number(90));
  CHECK_THROWS_AS(fib_number(92), std::overflow_error);
}

TEST_CASE("is_fib_minus_two matches the bispecial lengths") {
  std::set<std::uint64_t> expected;
  for (int m = 1; m <= 20; ++m) expected.insert(fib_number(m) - 2);
  for (std::uint64_t x = 0; x <= 500; ++x) {
    CHECK(is_fib_minus_two(x) == (expected.count(x) != 0));
  }
}

TEST_CASE("fib_word base cases and recursion") {
  CHECK(fib_word(0) == "0");
  CHECK(fib_word(1) == "01");
  CHECK(fib_word(2) == "010");
  CHECK(fib_word(3) == "01001");
  CHECK(fib_word(4) == "01001010");
  for (int n = 1; n <= 15; ++n) {
    CHECK(fib_word(n + 1) == fib_word(n) + fib_word(n - 1));
    CHECK(fib_word(n).size() == fib_number(n));
  }
}

TEST_CASE("fib_prefix is consistent with the finite words") {
  CHECK(fib_prefix(1) == "0");
  CHECK(fib_prefix(5) == "01001");
  CHECK(fib_prefix(8) == "01001010");
  for (int n = 0; n <= 12; ++n) {
    CHECK(fib_prefix(fib_number(n)) == fib_word(n));
  }
}

TEST_CASE("mirror reverses the whole word") {
  CHECK(mirror("01") == "10");
  CHECK(mirror("0") == "0");
  CHECK(mirror("01001") == "10010");
  CHECK(mirror(mirror("0100101")) == "0100101");
  CHECK(mirror("") == "");
}

TEST_CASE("occurrences lists overlapping matches in order") {
  CHECK(occurrences("000", "0000") == std::vector<std::size_t>{0, 1});
  CHECK(occurrences("010", "01001") == std::vector<std::size_t>{0});
  CHECK(occurrences("01", "010010") == std::vector<std::size_t>{0, 3});
  CHECK(occurrences("11", "0100") == std::vector<std::size_t>{});
  CHECK_THROWS_AS(occurrences("", "0"), std::invalid_argument);
}

TEST_CASE("factor membership") {
  FactorOracle oracle(24);
  CHECK(oracle.is_factor("010"));
  CHECK_FALSE(oracle.is_factor("000"));
  CHECK_FALSE(oracle.is_factor("11"));
  CHECK(oracle.is_factor(""));
  CHECK_THROWS_AS(oracle.is_factor("0101010101010101010101010"), std::invalid_argument);
  CHECK_THROWS_AS(oracle.is_factor("012"), std::invalid_argument);
}

TEST_CASE("delta is the longest admissible prefix length") {
  FactorOracle oracle(24);
  auto d = oracle.delta("000000");
  CHECK(d.value == 2);
  CHECK_FALSE(d.saturated);
  d = oracle.delta("01001");
  CHECK(d.value == 5);
  CHECK(d.saturated);
  d = oracle.delta("0100000");
  CHECK(d.value == 4);
  CHECK_FALSE(d.saturated);
  d = oracle.delta("");
  CHECK(d.value == 0);
  CHECK(d.saturated);
}

TEST_CASE("count_factors equals n+1, cross-checked by a direct sliding count") {
  FactorOracle oracle(26);
  CHECK(oracle.count_factors(1) == 2);
  CHECK(oracle.count_factors(9) == 10);

  const Word w = fib_word(12);  // length 377 >= 4 * 25
  std::set<Word> distinct;
  for (std::size_t i = 0; i + 25 <= w.size(); ++i) distinct.insert(w.substr(i, 25));
  CHECK(distinct.size() == 26);
  CHECK(oracle.count_factors(25) == distinct.size());
}

TEST_CASE("oracle window is a prefix of omega") {
  FactorOracle oracle(10);
  CHECK(oracle.window() == fib_prefix(oracle.window().size()));
  CHECK(oracle.window().size() >= 55);
}

TEST_CASE("factors_of returns the sorted factor set") {
  FactorOracle oracle(8);
  CHECK(oracle.factors_of(1) == std::vector<Word>{"0", "1"});
  CHECK(oracle.factors_of(2) == std::vector<Word>{"00", "01", "10"});
  CHECK(oracle.factors_of(3) == std::vector<Word>{"001", "010", "100", "101"});
}

TEST_CASE("factor language is closed under mirror") {
  FactorOracle oracle(15);
  for (std::size_t m = 1; m <= 14; ++m) {
    for (const Word& w : oracle.factors_of(m)) {
      CHECK(oracle.is_factor(mirror(w)));
    }
  }
}
