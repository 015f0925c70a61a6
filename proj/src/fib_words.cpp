#include "fibthermo/fib_words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fibthermo {
namespace words {

bool is_binary_word(std::string_view u) {
  return std::all_of(u.begin(), u.end(), [](char c) { return c == '0' || c == '1'; });
}

void require_binary(std::string_view u) {
  if (!is_binary_word(u)) {
    throw std::invalid_argument("word must consist of '0' and '1' symbols only");
  }
}

std::uint64_t fib_number(int n) {
  if (n < 0) {
    throw std::invalid_argument("fib_number: index must be non-negative");
  }
  std::uint64_t a = 1;  // F0
  std::uint64_t b = 2;  // F1
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    std::uint64_t next;
    if (__builtin_add_overflow(a, b, &next)) {
      throw std::overflow_error("fib_number: value exceeds 64-bit range at index " +
                                std::to_string(i + 1));
    }
    a = b;
    b = next;
  }
  return b;
}

bool is_fib_minus_two(std::uint64_t x) {
  std::uint64_t a = 1, b = 2;  // F0, F1
  while (b - 2 < x) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b - 2 == x;
}

Word fib_word(int n) {
  if (n < 0) {
    throw std::invalid_argument("fib_word: index must be non-negative");
  }
  Word a = "0";
  Word b = "01";
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    Word next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

Word fib_prefix(std::size_t len) {
  if (len == 0) return {};
  Word a = "0";
  Word b = "01";
  while (b.size() < len) {
    Word next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return b.substr(0, len);
}

Word mirror(std::string_view u) {
  return Word(u.rbegin(), u.rend());
}

std::vector<std::size_t> occurrences(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) {
    throw std::invalid_argument("occurrences: pattern must be non-empty");
  }
  std::vector<std::size_t> out;
  std::size_t pos = text.find(pattern);
  while (pos != std::string_view::npos) {
    out.push_back(pos);
    pos = text.find(pattern, pos + 1);
  }
  return out;
}

FactorOracle::FactorOracle(std::size_t max_query_length) : max_len_(max_query_length) {
  // omega is uniformly recurrent; 6L + 32 comfortably exceeds its recurrence
  // function, and the complexity check below catches any shortfall.
  const std::size_t win_len = std::max<std::size_t>(6 * max_len_ + 32, 55);
  window_ = fib_prefix(win_len);
  counts_.assign(max_len_ + 1, 0);
  counts_[0] = 1;

  std::size_t expected = 0;
  for (std::size_t m = 1; m <= max_len_; ++m) expected += m + 1;
  factors_.reserve(expected);

  const std::string_view w{window_};
  for (std::size_t m = 1; m <= max_len_; ++m) {
    for (std::size_t i = 0; i + m <= w.size(); ++i) {
      if (factors_.insert(w.substr(i, m)).second) ++counts_[m];
    }
    if (counts_[m] != m + 1) {
      throw std::logic_error("FactorOracle: complexity self-check failed at length " +
                             std::to_string(m) + " (got " + std::to_string(counts_[m]) + ")");
    }
  }
}

void FactorOracle::check_query(std::string_view u) const {
  if (u.size() > max_len_) {
    throw std::invalid_argument("FactorOracle: query of length " + std::to_string(u.size()) +
                                " exceeds certified maximum " + std::to_string(max_len_));
  }
  require_binary(u);
}

bool FactorOracle::is_factor(std::string_view u) const {
  check_query(u);
  if (u.empty()) return true;
  return factors_.count(u) != 0;
}

DeltaResult FactorOracle::delta(std::string_view u) const {
  check_query(u);
  // Prefixes of factors are factors, so factor-ness of u's prefixes is
  // monotone in the prefix length; binary search for the breakpoint.
  std::size_t lo = 0;          // prefix of length lo is a factor
  std::size_t hi = u.size();   // first length that might fail
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (factors_.count(u.substr(0, mid)) != 0) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return DeltaResult{lo, lo == u.size()};
}

std::size_t FactorOracle::count_factors(std::size_t n) const {
  if (n > max_len_) {
    throw std::invalid_argument("count_factors: length exceeds certified maximum");
  }
  return counts_[n];
}

std::vector<Word> FactorOracle::factors_of(std::size_t n) const {
  if (n > max_len_) {
    throw std::invalid_argument("factors_of: length exceeds certified maximum");
  }
  if (n == 0) return {Word{}};
  std::set<std::string_view> seen;
  const std::string_view w{window_};
  for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
  return {seen.begin(), seen.end()};
}

}  // namespace words
}  // namespace fibthermo
