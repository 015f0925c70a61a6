#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"
#include "fibthermo/thermo.hpp"

using namespace fibthermo;
using namespace fibthermo::thermo;
using words::FactorOracle;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("parameter validation has distinct diagnostics") {
  CHECK_NOTHROW(validate_params(10, 1.0));
  CHECK_NOTHROW(validate_params(5, 0.5));
  CHECK_THROWS_WITH_AS(validate_params(4, 1.0), doctest::Contains("at least 5"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate_params(12, 1.0), doctest::Contains("F(n)-2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate_params(10, -1.0), doctest::Contains("positive"),
                       std::invalid_argument);
  CHECK_THROWS_AS(validate_params(12, -1.0), std::invalid_argument);
}

TEST_CASE("potential value branches") {
  const auto params = validate_params(10, 1.0);
  CHECK(potential_value(2, params) == -1.0);
  CHECK(potential_value(10, params) == doctest::Approx(-std::log(11.0 / 10.0)).epsilon(1e-15));
  CHECK(potential_value(12, params) == doctest::Approx(-std::log(13.0 / 12.0)).epsilon(1e-15));
  CHECK(potential_value(12, params) == doctest::Approx(-0.080043).epsilon(1e-5));
  for (std::size_t d = 0; d <= 30; ++d) {
    CHECK(potential_value(d, params) < 0.0);
  }
}

TEST_CASE("return word characterization") {
  CHECK(is_return_word("0"));
  CHECK_FALSE(is_return_word("00"));
  CHECK_FALSE(is_return_word("000"));
  CHECK(is_return_word("0001"));
  CHECK(is_return_word("00011"));
  CHECK_FALSE(is_return_word("1"));
  CHECK_FALSE(is_return_word("00010"));
  CHECK_THROWS_AS(is_return_word(""), std::invalid_argument);
  CHECK_THROWS_AS(is_return_word("0a1"), std::invalid_argument);
}

TEST_CASE("return word enumeration matches brute force") {
  CHECK(enumerate_return_words(1) == std::vector<Word>{"0"});
  CHECK(enumerate_return_words(5) == std::vector<Word>{"0", "0001", "00011"});

  std::vector<Word> brute;
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
      Word u(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if (bits & (1ull << (len - 1 - i))) u[i] = '1';
      }
      if (is_return_word(u)) brute.push_back(u);
    }
  }
  CHECK(enumerate_return_words(10) == brute);
}

TEST_CASE("trajectory annotation of short return words") {
  const auto params = validate_params(10, 1.0);
  FactorOracle oracle(30);

  auto ann = annotate_trajectory("0001", params, oracle);
  CHECK(ann.deltas == std::vector<std::size_t>{2, 5, 4, 3});
  CHECK(ann.accidents.size() == 1);
  CHECK(ann.accidents[0].time == 1);
  CHECK(ann.accidents[0].depth == 5);
  CHECK(ann.fe_transitions.empty());
  CHECK(ann.ef_transitions.empty());
  for (auto z : ann.zones) CHECK(z == Zone::Free);

  ann = annotate_trajectory("0", params, oracle);
  CHECK(ann.deltas == std::vector<std::size_t>{2});
  CHECK(ann.accidents.empty());

  ann = annotate_trajectory("00011", params, oracle);
  CHECK(ann.deltas == std::vector<std::size_t>{2, 3, 2, 1, 3});
  CHECK(ann.accidents.size() == 2);
  CHECK(ann.accidents[0].time == 1);
  CHECK(ann.accidents[1].time == 4);

  CHECK_THROWS_AS(annotate_trajectory("00", params, oracle), std::invalid_argument);
}

TEST_CASE("birkhoff sums and tail independence") {
  const auto params = validate_params(10, 1.0);
  FactorOracle oracle(40);
  CHECK(birkhoff_sum("0", params, oracle) == -1.0);
  CHECK(birkhoff_sum("0001", params, oracle) == -4.0);
  CHECK(birkhoff_sum("00011", params, oracle) == -5.0);

  // Any continuation inside [000] leaves every delta unchanged.
  const Word u = "00010110101";
  REQUIRE(is_return_word(u));
  const Word with_tail = u + "000";
  const Word with_longer_tail = u + "000101001";
  for (std::size_t k = 0; k < u.size(); ++k) {
    CHECK(oracle.delta(std::string_view(with_tail).substr(k)).value ==
          oracle.delta(std::string_view(with_longer_tail).substr(k)).value);
  }
}

TEST_CASE("lambda truncation") {
  const auto params = validate_params(10, 1.0);

  auto est = lambda_truncated(1.0, params, 1);
  CHECK(est.partial_sum == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  est = lambda_truncated(1.0, params, 5);
  const double expected = std::exp(-1.0) + std::exp(-4.0) + std::exp(-5.0);
  CHECK(std::abs(est.partial_sum - expected) < 1e-15);
  CHECK(est.num_return_words == 3);
  CHECK(est.per_length_counts == std::vector<std::size_t>{0, 1, 0, 0, 1, 1});

  est = lambda_truncated(2.0, params, 0);
  CHECK(est.partial_sum == 0.0);
  CHECK(est.num_return_words == 0);

  CHECK_THROWS_AS(lambda_truncated(0.0, params, 5), std::invalid_argument);
}

TEST_CASE("entry and exit words") {
  FactorOracle oracle(20);
  auto ee = entry_exit_words(validate_params(10, 1.0), oracle);
  CHECK(ee.entry == std::vector<Word>{"0", "010", "010010"});
  CHECK(ee.exit.size() == 9);
  for (const auto& w : ee.exit) CHECK(w.size() == 9);

  ee = entry_exit_words(validate_params(5, 1.0), oracle);
  CHECK(ee.entry == std::vector<Word>{"0", "010"});
  CHECK(ee.exit.size() == 4);
}

TEST_CASE("D_W classification at the smallest threshold") {
  const auto params = validate_params(5, 1.0);
  FactorOracle oracle(63);
  const auto level = rauzy::bispecial_level(4, oracle);  // |W| = 6 >= N = 5

  CHECK_FALSE(classify_dw("0001", level, params, oracle));
  CHECK_FALSE(classify_dw("0", level, params, oracle));

  const auto member = find_dw_member(level, params, oracle, 60);
  REQUIRE(member.has_value());
  CHECK(member->size() < 60);
  CHECK(is_return_word(*member));
  CHECK(classify_dw(*member, level, params, oracle));

  // |W| below N is rejected outright.
  const auto small_level = rauzy::bispecial_level(3, oracle);
  CHECK_THROWS_AS(classify_dw("0001", small_level, params, oracle), std::invalid_argument);
}

TEST_CASE("zeta evaluation") {
  CHECK(std::abs(*zeta(2.0, 1e-12) - kPi * kPi / 6.0) < 1e-10);
  CHECK(std::abs(*zeta(4.0, 1e-12) - kPi * kPi * kPi * kPi / 90.0) < 1e-10);
  CHECK(*zeta(1.0001, 1e-10) > 1000.0);
  CHECK_FALSE(zeta(1.0).has_value());
  CHECK_FALSE(zeta(0.5).has_value());
  CHECK_THROWS_AS(zeta(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("hofbauer inversion") {
  CHECK(std::abs(hofbauer_beta_c(std::log(kPi * kPi / 6.0)) - 2.0) < 1e-8);
  CHECK(std::abs(hofbauer_beta_c(std::log(kPi * kPi * kPi * kPi / 90.0)) - 4.0) < 1e-8);
  const double b = hofbauer_beta_c(0.7);
  CHECK(std::abs(*zeta(b) - std::exp(0.7)) < 1e-8);
  CHECK_THROWS_AS(hofbauer_beta_c(0.0), std::invalid_argument);
}

TEST_CASE("P and Q levels") {
  auto lev = levels_pq(validate_params(10, 1.0));
  CHECK(lev.p_level == 5);
  CHECK(lev.q_level == 4);
  CHECK(lev.p_bispecial == 5);
  CHECK(lev.q_bispecial == 4);
  CHECK(lev.consistent);

  lev = levels_pq(validate_params(5, 1.0));
  CHECK(lev.p_level == 4);
  CHECK(lev.q_level == 3);
  CHECK(lev.p_level == lev.q_level + 1);
}

TEST_CASE("lower bound report") {
  const auto params = validate_params(10, 1.0);

  auto r = lower_bound(1.5, params);
  CHECK(std::isinf(r.bound));
  CHECK(std::isinf(r.zeta_beta_minus_1));
  CHECK_FALSE(r.vacuous);

  r = lower_bound(2.1, params);
  CHECK(std::isfinite(r.bound));
  CHECK_FALSE(r.vacuous);
  CHECK(r.tw_lower == doctest::Approx(*zeta(1.1) - 2.0 * *zeta(2.1)).epsilon(1e-12));
  CHECK(r.P == 5);
  CHECK(r.Q == 4);

  r = lower_bound(4.0, params);
  CHECK(std::isfinite(r.bound));
  CHECK(r.vacuous);
  CHECK(r.tw_lower < 0.0);

  CHECK_THROWS_AS(lower_bound(1.0, params), std::invalid_argument);
}

TEST_CASE("exclusion report") {
  const auto params = validate_params(10, 1.0);
  const auto rep = beta_c_exclusion(params, {1.1, 1.5, 2.0});
  CHECK(rep.entries.size() == 3);
  for (const auto& e : rep.entries) CHECK(std::isinf(e.bound));
  CHECK(rep.lambda_monotone_decreasing);
  CHECK(rep.excluded);
  CHECK_THROWS_AS(beta_c_exclusion(params, {2.5}), std::invalid_argument);
  CHECK_THROWS_AS(beta_c_exclusion(params, {1.0}), std::invalid_argument);
}
