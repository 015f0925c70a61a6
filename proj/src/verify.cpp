#include "fibthermo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"
#include "fibthermo/thermo.hpp"

namespace fibthermo {
namespace verify {

namespace {

constexpr std::size_t kMaxRecordedFailures = 100;

class Checker {
 public:
  void record(const std::string& id, bool ok, const std::string& expected,
              const std::string& got) {
    ++cases_;
    if (ok) return;
    ++failures_total_;
    if (failures_.size() < kMaxRecordedFailures) {
      failures_.push_back(Failure{id, expected, got});
    }
  }

  void is_true(const std::string& id, bool ok, const std::string& detail = "") {
    record(id, ok, "true", ok ? "true" : (detail.empty() ? "false" : detail));
  }

  template <typename A, typename B>
  void eq(const std::string& id, const A& expected, const B& got) {
    std::ostringstream e, g;
    e << expected;
    g << got;
    record(id, e.str() == g.str(), e.str(), g.str());
  }

  void merge(const Checker& other) {
    cases_ += other.cases_;
    failures_total_ += other.failures_total_;
    for (const auto& f : other.failures_) {
      if (failures_.size() < kMaxRecordedFailures) failures_.push_back(f);
    }
  }

  long cases() const { return cases_; }
  long failures_total() const { return failures_total_; }
  std::vector<Failure> take_failures() { return std::move(failures_); }

 private:
  long cases_ = 0;
  long failures_total_ = 0;
  std::vector<Failure> failures_;
};

std::size_t worker_count() {
  if (const char* env = std::getenv("FIBTHERMO_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Chunked parallel map with a deterministic merge: chunk results are combined
// in index order, so the report is independent of the worker count.
void parallel_chunks(std::size_t count, Checker& sink,
                     const std::function<void(std::size_t, std::size_t, Checker&)>& body) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1 || count < 64) {
    body(0, count, sink);
    return;
  }
  std::vector<Checker> parts(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] { body(begin, end, parts[w]); });
  }
  for (auto& t : threads) t.join();
  for (const auto& part : parts) sink.merge(part);
}

bool is_palindrome(const Word& w) { return w == words::mirror(w); }

// ---------------------------------------------------------------------------
// fibwords

void battery_fibwords(Checker& c) {
  using namespace words;

  {
    const FactorOracle oracle(61);
    for (std::size_t n = 1; n <= 60; ++n) {
      c.eq("fibwords/complexity/n=" + std::to_string(n), n + 1, oracle.count_factors(n));
    }
  }

  for (int n = 0; n <= 25; ++n) {
    const Word a = fib_word(n);
    const Word b = fib_word(n + 1);
    c.is_true("fibwords/prefix_chain/n=" + std::to_string(n),
              b.compare(0, a.size(), a) == 0);
    c.eq("fibwords/length/n=" + std::to_string(n), fib_number(n), a.size());
  }

  {
    const FactorOracle oracle(21);
    for (std::size_t m = 1; m <= 20; ++m) {
      bool ok = true;
      for (const Word& w : oracle.factors_of(m)) {
        if (!oracle.is_factor(mirror(w))) ok = false;
      }
      c.is_true("fibwords/mirror_closure/len=" + std::to_string(m), ok);
    }
  }

  {
    const FactorOracle oracle(12);
    for (std::size_t len = 1; len <= 12; ++len) {
      bool ok = true;
      for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
        Word u(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
          if (bits & (1ull << i)) u[i] = '1';
        }
        const std::size_t d = oracle.delta(u).value;
        for (std::size_t k = 0; k <= len; ++k) {
          if (oracle.delta(std::string_view(u).substr(0, k)).value < std::min(d, k)) ok = false;
        }
      }
      c.is_true("fibwords/delta_truncation/len=" + std::to_string(len), ok);
    }
  }

  {
    const FactorOracle oracle(18);
    for (std::size_t len = 1; len <= 18; ++len) {
      int m = 0;
      while (fib_number(m) < 4 * len) ++m;
      const Word reference = fib_word(m);
      std::size_t mismatches = 0;
      Word first;
      for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
        Word u(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
          if (bits & (1ull << i)) u[i] = '1';
        }
        const bool brute = reference.find(u) != Word::npos;
        if (oracle.is_factor(u) != brute) {
          if (mismatches == 0) first = u;
          ++mismatches;
        }
      }
      c.record("fibwords/membership_brute_force/len=" + std::to_string(len), mismatches == 0,
               "0 mismatches", std::to_string(mismatches) + " mismatches (first: " + first + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// rauzy

void battery_rauzy(Checker& c) {
  using namespace words;
  using namespace rauzy;

  {
    const FactorOracle oracle(42);
    for (int n = 1; n <= 40; ++n) {
      const RauzyGraph g = build_rauzy(n, oracle);
      c.eq("rauzy/vertex_count/n=" + std::to_string(n), n + 1, g.vertices.size());
      c.eq("rauzy/edge_count/n=" + std::to_string(n), n + 2, g.edges.size());
      for (const auto& e : g.edges) {
        if (!oracle.is_factor(e.from + e.appended) || e.prepended + e.to != e.from + e.appended) {
          c.is_true("rauzy/edge_label/n=" + std::to_string(n), false, e.from + "->" + e.to);
        }
      }
    }
  }

  const FactorOracle oracle(146);

  // Proposition L_n(omega) = phi(L_n(W)), both inclusions, with |L_n(W)| = n+1.
  for (int p : {2, 3, 4}) {
    const BispecialLevel level = bispecial_level(p, oracle);
    for (int n = 1; n <= 25; ++n) {
      const std::size_t worst = level.w.size() + static_cast<std::size_t>(n) * level.r1.size();
      if (worst > oracle.max_query_length()) break;
      const LoopLanguage ll = loop_language(level, n, oracle);
      c.eq("rauzy/loop_language_size/p=" + std::to_string(p) + "/n=" + std::to_string(n),
           n + 1, ll.sequences.size());
      std::set<Word> image;
      for (const auto& seq : ll.sequences) image.insert(phi_encode(seq));
      const auto ln = oracle.factors_of(static_cast<std::size_t>(n));
      const std::set<Word> expected(ln.begin(), ln.end());
      c.is_true("rauzy/phi_image/p=" + std::to_string(p) + "/n=" + std::to_string(n),
                image == expected);
    }
  }

  // phi(R1^(n)) = mirror(omega_n), via the index recursion and via decode.
  {
    const BispecialLevel base = bispecial_level(2, oracle);
    LoopIndexSeq r1 = "1", r2 = "2";
    for (int n = 0; n <= 14; ++n) {
      c.eq("rauzy/phi_r1/n=" + std::to_string(n), mirror(fib_word(n)), phi_encode(r1));
      c.eq("rauzy/phi_decode_r1/n=" + std::to_string(n), hierarchy_level(base, n).r1,
           phi_decode(mirror(fib_word(n)), base));
      const LoopIndexSeq next_r1 = r2 + r1;
      r2 = r1;
      r1 = next_r1;
    }
  }

  // Palindrome prefixes and suffixes of the hierarchy.
  {
    const BispecialLevel base = bispecial_level(2, oracle);
    std::vector<BispecialLevel> levels;
    for (int k = 0; k <= 10; ++k) levels.push_back(hierarchy_level(base, k));
    for (int n = 0; n <= 10; ++n) {
      c.is_true("rauzy/palindrome/k=" + std::to_string(n), is_palindrome(levels[n].w));
      for (int k = 0; k <= n; ++k) {
        const Word& small = levels[k].w;
        const Word& big = levels[n].w;
        const bool pre = big.compare(0, small.size(), small) == 0;
        const bool suf = big.size() >= small.size() &&
                         big.compare(big.size() - small.size(), small.size(), small) == 0;
        c.is_true("rauzy/prefix_suffix/k=" + std::to_string(k) + "/n=" + std::to_string(n),
                  pre && suf);
      }
    }
  }

  // Every purely left-special word sits between consecutive bispecials.
  {
    const BispecialLevel base = bispecial_level(2, oracle);
    std::vector<Word> bis;
    for (int k = 0; k <= 12; ++k) bis.push_back(hierarchy_level(base, k).w);
    const std::size_t f10 = fib_number(10);
    for (std::size_t m = 1; m <= f10; ++m) {
      const SpecialWords sw = special_words(static_cast<int>(m), oracle);
      if (sw.left == sw.right) continue;  // bispecial length
      bool ok = false;
      for (std::size_t k = 1; k < bis.size(); ++k) {
        if (bis[k].size() < m) continue;
        const bool v_prefix_of_bigger = bis[k].compare(0, m, sw.left) == 0;
        const bool smaller_prefix_of_v = sw.left.compare(0, bis[k - 1].size(), bis[k - 1]) == 0;
        if (v_prefix_of_bigger && smaller_prefix_of_v) ok = true;
        break;
      }
      c.is_true("rauzy/left_special_sandwich/m=" + std::to_string(m), ok, sw.left);
    }
  }

  // Mirrors of bicephalic words are bicephalic, at mirrored positions.
  for (int p : {2, 3, 4}) {
    const BispecialLevel level = bispecial_level(p, oracle);
    for (int n = 1; n <= 12; ++n) {
      const BicephalicSet bs = bicephalic_set(level, n, oracle);
      for (const Word& u : bs.words) {
        const Word mu = mirror(u);
        bool ok = oracle.is_factor(mu);
        const auto direct = occurrences(level.w, u);
        const auto mirrored = occurrences(level.w, mu);
        std::vector<std::size_t> expected;
        for (auto it = direct.rbegin(); it != direct.rend(); ++it) {
          expected.push_back(u.size() - level.w.size() - *it);
        }
        ok = ok && mirrored == expected;
        c.is_true("rauzy/mirror_bicephalic/p=" + std::to_string(p) + "/n=" + std::to_string(n),
                  ok, u);
      }
    }
  }

  // omega factors as the concatenation of mirrored Fibonacci words.
  {
    Word concat;
    for (int n = 0; n <= 9; ++n) concat += mirror(fib_word(n));
    c.eq("rauzy/mirror_factorization", fib_prefix(concat.size()), concat);
  }

  // xi_n: palindrome prefix of omega_n missing its final two symbols.
  for (int n = 2; n <= 14; ++n) {
    const Word xi = xi_palindrome_prefix(n);
    const Word wn = fib_word(n);
    c.eq("rauzy/xi_length/n=" + std::to_string(n), fib_number(n) - 2, xi.size());
    c.is_true("rauzy/xi_palindrome/n=" + std::to_string(n), is_palindrome(xi));
    c.eq("rauzy/xi_split/n=" + std::to_string(n), wn, xi + wn.substr(wn.size() - 2));
    c.eq("rauzy/xi_tail/n=" + std::to_string(n), (n % 2 == 0) ? "10" : "01",
         wn.substr(wn.size() - 2));
    Word concat;
    for (int k = 0; k + 2 <= n; ++k) concat += mirror(fib_word(k));
    c.eq("rauzy/xi_factorization/n=" + std::to_string(n), concat, xi);
  }
}

// ---------------------------------------------------------------------------
// bicephalic

void battery_bicephalic(Checker& c) {
  using namespace words;
  using namespace rauzy;

  const FactorOracle oracle(125);
  for (int p : {2, 3}) {
    const BispecialLevel level = bispecial_level(p, oracle);
    for (int n = 1; n <= 40; ++n) {
      const BicephalicSet bs = bicephalic_set(level, n, oracle);
      c.eq("bicephalic/cardinality/p=" + std::to_string(p) + "/n=" + std::to_string(n),
           n, bs.words.size());
      const bool fib_case = is_fib_minus_two(static_cast<std::uint64_t>(n) - 1);
      c.eq("bicephalic/special_count/p=" + std::to_string(p) + "/n=" + std::to_string(n),
           fib_case ? 1 : 2, bs.special_count);
      for (const Word& u : bs.words) {
        if (occurrences(level.w, u).size() != static_cast<std::size_t>(n) ||
            !oracle.is_factor(u)) {
          c.is_true("bicephalic/occurrences/p=" + std::to_string(p) + "/n=" + std::to_string(n),
                    false, u);
        }
      }
    }

    // |U(k)| + 1 <= F(p) - 1 + (k-1) F(p-1), equality only for the all-R1 walk.
    for (int k = 1; k <= 20; ++k) {
      const std::uint64_t cap = fib_number(p) - 1 + (k - 1) * fib_number(p - 1);
      std::vector<LoopIndexSeq> seqs =
          k == 1 ? std::vector<LoopIndexSeq>{LoopIndexSeq{}}
                 : loop_language(level, k - 1, oracle).sequences;
      for (const auto& seq : seqs) {
        const Word u = level.w + append_loops(level, seq);
        const bool all_r1 = seq.find('2') == LoopIndexSeq::npos;
        const std::uint64_t len1 = u.size() + 1;
        const bool ok = all_r1 ? len1 == cap : len1 < cap;
        c.is_true("bicephalic/length_bound/p=" + std::to_string(p) + "/k=" + std::to_string(k),
                  ok, seq + ": " + std::to_string(len1) + " vs " + std::to_string(cap));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// transitions

void battery_transitions(Checker& c) {
  using namespace words;
  using namespace thermo;

  // DFS enumeration agrees with brute-force filtering of every binary word.
  {
    const auto enumerated = enumerate_return_words(18);
    std::vector<Word> brute;
    for (std::size_t len = 1; len <= 18; ++len) {
      // Highest bit first, so ascending integers give lexicographic order.
      for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
        Word u(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
          if (bits & (1ull << (len - 1 - i))) u[i] = '1';
        }
        if (is_return_word(u)) brute.push_back(u);
      }
    }
    c.eq("transitions/return_words_brute_force/count", brute.size(), enumerated.size());
    c.is_true("transitions/return_words_brute_force/order", brute == enumerated);
  }

  const PotentialParams params = validate_params(10, 1.0);
  const std::size_t N = 10;
  const FactorOracle oracle(25);

  {
    const auto ret = enumerate_return_words(22);
    parallel_chunks(ret.size(), c, [&](std::size_t begin, std::size_t end, Checker& part) {
      for (std::size_t i = begin; i < end; ++i) {
        const Word& u = ret[i];
        TrajectoryAnnotation ann;
        try {
          ann = annotate_trajectory(u, params, oracle);
        } catch (const std::exception& e) {
          part.is_true("transitions/annotate/" + u, false, e.what());
          continue;
        }
        const Word padded = u + "000";
        bool ok = true;
        std::string why;
        for (std::size_t k = 0; k < u.size() && ok; ++k) {
          const bool excursion = ann.deltas[k] >= N;
          if ((ann.zones[k] == Zone::Excursion) != excursion) {
            ok = false;
            why = "zone rule at k=" + std::to_string(k);
          }
          if (k == 0) continue;
          if (ann.deltas[k] + 1 < ann.deltas[k - 1]) {
            ok = false;
            why = "delta dropped by more than one at k=" + std::to_string(k);
          }
          const bool accident = ann.deltas[k] > ann.deltas[k - 1] - 1;
          const bool marked =
              std::any_of(ann.accidents.begin(), ann.accidents.end(),
                          [&](const Accident& a) { return a.time == k; });
          if (accident != marked) {
            ok = false;
            why = "accident rule at k=" + std::to_string(k);
          }
          if (!accident && ann.deltas[k] != ann.deltas[k - 1] - 1) {
            ok = false;
            why = "missing unit decrement at k=" + std::to_string(k);
          }
        }
        for (std::size_t t = 0; t < ann.fe_transitions.size() && ok; ++t) {
          const std::size_t k = ann.fe_transitions[t];
          const Word& entry = ann.entry_bispecials[t];
          if (entry.size() > N - 2 ||
              Word(padded.substr(k, entry.size())) != entry ||
              rauzy::classify_word(entry, oracle).kind != rauzy::SpecialKind::bispecial) {
            ok = false;
            why = "entry word at k=" + std::to_string(k);
          }
        }
        for (std::size_t t = 0; t < ann.ef_transitions.size() && ok; ++t) {
          const std::size_t k = ann.ef_transitions[t];
          const auto kind = rauzy::classify_word(ann.exit_words[t], oracle).kind;
          if (ann.deltas[k - 1] != N || ann.deltas[k] != N - 1 ||
              ann.exit_words[t].size() != N - 1 ||
              kind == rauzy::SpecialKind::right_special ||
              kind == rauzy::SpecialKind::bispecial) {
            ok = false;
            why = "exit word at k=" + std::to_string(k);
          }
        }
        part.is_true("transitions/annotation/" + u, ok, why);
      }
    });
  }

  {
    const EntryExitWords ee = entry_exit_words(params, oracle);
    c.eq("transitions/entry_words", Word("0,010,010010"),
         ee.entry.size() == 3 ? ee.entry[0] + "," + ee.entry[1] + "," + ee.entry[2] : Word("?"));
    c.eq("transitions/exit_word_count", N - 1, ee.exit.size());
  }

  // D_W trajectories at the smallest admissible threshold.
  {
    const PotentialParams small = validate_params(5, 1.0);
    const FactorOracle dw_oracle(63);
    const auto level = rauzy::bispecial_level(4, dw_oracle);  // |W| = 6 >= N
    const auto member = find_dw_member(level, small, dw_oracle, 60);
    c.is_true("transitions/dw_member_exists", member.has_value());
    if (member) {
      c.is_true("transitions/dw_member_classified",
                classify_dw(*member, level, small, dw_oracle), *member);
      const auto ann = annotate_trajectory(*member, small, dw_oracle);
      const Word padded = *member + "000";
      const Word& w = level.w;
      const Word v = rauzy::special_words(4, dw_oracle).left;

      const Word u0 = padded.substr(1, ann.deltas[1]);
      c.is_true("transitions/dw_depth0_shape",
                u0.front() == '0' &&
                    u0.compare(u0.size() - w.size(), w.size(), w) == 0, u0);

      std::vector<Accident> exc;
      for (const Accident& a : ann.accidents) {
        if (a.time >= 2 && ann.zones[a.time] == Zone::Excursion) exc.push_back(a);
      }
      c.eq("transitions/dw_accidents", 2, exc.size());
      if (exc.size() == 2) {
        const std::size_t l = exc[0].time;
        const std::size_t lp = exc[1].time;
        const std::size_t ef = ann.ef_transitions[0];
        // Depth words run from each accident up to the next W occurrence or
        // the exit word; occurrences may overlap, so the lengths pin the
        // decomposition exactly.
        c.eq("transitions/dw_depth0_length", w.size() + l - 1, ann.deltas[1]);
        c.eq("transitions/dw_depth1_length", w.size() + (lp - l), ann.deltas[l]);
        c.eq("transitions/dw_depth2_length", (ef - lp) + v.size(), ann.deltas[lp]);
        const Word u1 = padded.substr(l, ann.deltas[l]);
        const Word u2 = padded.substr(lp, ann.deltas[lp]);
        c.is_true("transitions/dw_depth1_shape",
                  u1.compare(0, w.size(), w) == 0 &&
                      u1.compare(u1.size() - w.size(), w.size(), w) == 0, u1);
        c.is_true("transitions/dw_depth2_shape",
                  u2.compare(0, w.size(), w) == 0 &&
                      u2.compare(u2.size() - v.size(), v.size(), v) == 0, u2);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// bounds

void battery_bounds(Checker& c) {
  using namespace thermo;

  const double pi = 3.14159265358979323846;
  c.is_true("bounds/zeta_basel", std::abs(*zeta(2.0, 1e-12) - pi * pi / 6.0) < 1e-10);
  c.is_true("bounds/zeta_pi4", std::abs(*zeta(4.0, 1e-12) - pi * pi * pi * pi / 90.0) < 1e-10);
  c.is_true("bounds/zeta_near_pole", *zeta(1.0001, 1e-10) > 1000.0);
  c.is_true("bounds/zeta_divergent_at_1", !zeta(1.0).has_value());
  c.is_true("bounds/zeta_divergent_below_1", !zeta(0.5).has_value());

  c.is_true("bounds/hofbauer_basel",
            std::abs(hofbauer_beta_c(std::log(pi * pi / 6.0)) - 2.0) < 1e-8);
  c.is_true("bounds/hofbauer_pi4",
            std::abs(hofbauer_beta_c(std::log(pi * pi * pi * pi / 90.0)) - 4.0) < 1e-8);
  {
    const double b = hofbauer_beta_c(0.7);
    c.is_true("bounds/hofbauer_roundtrip", std::abs(*zeta(b) - std::exp(0.7)) < 1e-8);
  }

  const PotentialParams params = validate_params(10, 1.0);

  {
    const double e1 = std::exp(-1.0);
    const auto l1 = lambda_truncated(1.0, params, 1);
    c.is_true("bounds/lambda_len1", std::abs(l1.partial_sum - e1) < 1e-15,
              std::to_string(l1.partial_sum));
    const double expected = std::exp(-1.0) + std::exp(-4.0) + std::exp(-5.0);
    const auto l5 = lambda_truncated(1.0, params, 5);
    c.is_true("bounds/lambda_len5", std::abs(l5.partial_sum - expected) < 1e-15,
              std::to_string(l5.partial_sum));
    c.eq("bounds/lambda_len5_count", 3, l5.num_return_words);

    double prev = 0.0;
    bool monotone = true;
    for (std::size_t len = 1; len <= 22; ++len) {
      const double cur = lambda_truncated(1.0, params, len).partial_sum;
      if (cur < prev) monotone = false;
      prev = cur;
    }
    c.is_true("bounds/lambda_monotone_max_len", monotone);

    const double b1 = lambda_truncated(1.0, params, 22).partial_sum;
    const double b2 = lambda_truncated(2.0, params, 22).partial_sum;
    const double b3 = lambda_truncated(3.0, params, 22).partial_sum;
    c.is_true("bounds/lambda_decreasing_beta", b1 > b2 && b2 > b3);
  }

  for (double beta : {1.1, 1.5, 2.0}) {
    c.is_true("bounds/bound_divergent/beta=" + std::to_string(beta),
              std::isinf(lower_bound(beta, params).bound));
  }
  {
    const BoundReport r21 = lower_bound(2.1, params);
    c.is_true("bounds/bound_2.1_finite", std::isfinite(r21.bound) && !r21.vacuous);
    const BoundReport r4 = lower_bound(4.0, params);
    c.is_true("bounds/bound_4_vacuous", std::isfinite(r4.bound) && r4.vacuous);
    const double b1 = lower_bound(2.1, params).bound;
    const double b2 = lower_bound(2.01, params).bound;
    const double b3 = lower_bound(2.001, params).bound;
    c.is_true("bounds/bound_divergence_approach", b1 < b2 && b2 < b3);
  }

  {
    const LevelsPQ lev = levels_pq(params);
    c.eq("bounds/levels_P", 5, lev.p_level);
    c.eq("bounds/levels_Q", 4, lev.q_level);
    c.is_true("bounds/levels_consistent", lev.consistent);
    const LevelsPQ lev5 = levels_pq(validate_params(5, 1.0));
    c.eq("bounds/levels_P_N5", 4, lev5.p_level);
    c.eq("bounds/levels_Q_N5", 3, lev5.q_level);
  }

  // Exactly h occurrences of the purely left-special exit word in level-P
  // bicephalic words.
  {
    const words::FactorOracle oracle(90);
    const auto level = rauzy::bispecial_level(5, oracle);
    const Word v = rauzy::special_words(9, oracle).left;
    for (int h = 1; h <= 10; ++h) {
      std::vector<rauzy::LoopIndexSeq> seqs =
          h == 1 ? std::vector<rauzy::LoopIndexSeq>{rauzy::LoopIndexSeq{}}
                 : rauzy::loop_language(level, h - 1, oracle).sequences;
      for (const auto& seq : seqs) {
        const Word u = level.w + rauzy::append_loops(level, seq);
        c.eq("bounds/occurrence_lemma/h=" + std::to_string(h) + "/" +
                 (seq.empty() ? Word("e") : Word(seq)),
             h, words::occurrences(v, u).size());
      }
    }
  }

  {
    const ExclusionReport rep = beta_c_exclusion(params, {1.1, 1.5, 2.0});
    bool all_inf = !rep.entries.empty();
    for (const auto& e : rep.entries) {
      if (!std::isinf(e.bound)) all_inf = false;
    }
    c.is_true("bounds/exclusion_all_divergent", all_inf);
    c.is_true("bounds/exclusion_lambda_monotone", rep.lambda_monotone_decreasing);
    c.is_true("bounds/exclusion_verdict", rep.excluded);
  }
}

struct Suite {
  const char* name;
  void (*battery)(Checker&);
};

constexpr Suite kSuites[] = {
    {"fibwords", battery_fibwords},     {"rauzy", battery_rauzy},
    {"bicephalic", battery_bicephalic}, {"transitions", battery_transitions},
    {"bounds", battery_bounds},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  out.emplace_back("all");
  return out;
}

Report run_suite(const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  Checker checker;
  bool known = false;
  for (const auto& s : kSuites) {
    if (suite == s.name || suite == "all") {
      s.battery(checker);
      known = true;
    }
  }
  if (!known) {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }
  Report report;
  report.suite = suite;
  report.cases_run = checker.cases();
  report.failures_total = checker.failures_total();
  report.failures = checker.take_failures();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace verify
}  // namespace fibthermo
