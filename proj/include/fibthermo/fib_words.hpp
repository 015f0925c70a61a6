#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fibthermo {

// Binary word over {0,1}, stored as ASCII '0'/'1'.
using Word = std::string;

namespace words {

bool is_binary_word(std::string_view u);
void require_binary(std::string_view u);

// Fibonacci numbers with F0 = 1, F1 = 2, F(n+1) = F(n) + F(n-1).
// Throws std::overflow_error once the value no longer fits in 64 bits.
std::uint64_t fib_number(int n);

// True iff x = F(m) - 2 for some m >= 1 (bispecial-length test).
bool is_fib_minus_two(std::uint64_t x);

// Finite Fibonacci words: w0 = "0", w1 = "01", w(n+1) = w(n) w(n-1).
Word fib_word(int n);

// First `len` symbols of the infinite Fibonacci word.
Word fib_prefix(std::size_t len);

// Full reversal, first symbol included.
Word mirror(std::string_view u);

// All start positions of `pattern` in `text`, overlaps included, ascending.
std::vector<std::size_t> occurrences(std::string_view pattern, std::string_view text);

struct DeltaResult {
  std::size_t value = 0;   // length of the longest prefix lying in L(omega)
  bool saturated = false;  // the whole query is in L(omega)
};

// Validated window of the infinite Fibonacci word. Construction slides over
// a prefix of omega and self-checks the Sturmian complexity |L_m| = m + 1 for
// every m <= max_query_length; a window too short to contain every factor
// would fail that count. Immutable afterwards, safe for concurrent reads.
class FactorOracle {
 public:
  explicit FactorOracle(std::size_t max_query_length);

  FactorOracle(const FactorOracle&) = delete;
  FactorOracle& operator=(const FactorOracle&) = delete;
  FactorOracle(FactorOracle&&) = delete;
  FactorOracle& operator=(FactorOracle&&) = delete;

  std::size_t max_query_length() const noexcept { return max_len_; }
  const Word& window() const noexcept { return window_; }

  // Membership in L(omega). Queries longer than max_query_length are
  // rejected: the window does not certify them.
  bool is_factor(std::string_view u) const;

  DeltaResult delta(std::string_view u) const;

  // |L_n(omega)|; always n + 1 after the construction self-check.
  std::size_t count_factors(std::size_t n) const;

  // L_n(omega) sorted lexicographically.
  std::vector<Word> factors_of(std::size_t n) const;

 private:
  void check_query(std::string_view u) const;

  std::size_t max_len_;
  Word window_;
  // Views into window_; window_ is never mutated after construction.
  std::unordered_set<std::string_view> factors_;
  std::vector<std::size_t> counts_;
};

}  // namespace words
}  // namespace fibthermo
