#include "fibthermo/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fibthermo {
namespace thermo {

using words::FactorOracle;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGamma = 1.6180339887498948482;  // (1 + sqrt 5) / 2

// Neumaier-compensated accumulator; summation order fixes the result.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};
}  // namespace

PotentialParams validate_params(int N, double A) {
  if (N < 5) {
    throw std::invalid_argument("N must be at least 5 (excursion threshold far above 2)");
  }
  if (words::is_fib_minus_two(static_cast<std::uint64_t>(N) - 1)) {
    throw std::invalid_argument("N-1 must not equal F(n)-2 for any n (got N-1 = " +
                                std::to_string(N - 1) + ", a bispecial length)");
  }
  if (!(A > 0.0)) {
    throw std::invalid_argument("A must be positive");
  }
  return PotentialParams{N, A};
}

double potential_value(std::size_t delta_value, const PotentialParams& params) {
  if (delta_value >= static_cast<std::size_t>(params.excursion_threshold)) {
    return -std::log1p(1.0 / static_cast<double>(delta_value));
  }
  return -params.free_penalty;
}

bool is_return_word(std::string_view u) {
  words::require_binary(u);
  if (u.empty()) {
    throw std::invalid_argument("is_return_word: word must be non-empty");
  }
  const Word padded = Word(u) + "000";
  if (padded.compare(0, 3, "000") != 0) return false;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (padded[i] == '0' && padded[i + 1] == '0' && padded[i + 2] == '0') return false;
  }
  if (u.size() >= 2 && padded[u.size() - 1] == '0') return false;  // triple across the tail
  return true;
}

void enumerate_return_words(std::size_t max_len, const std::function<void(const Word&)>& sink) {
  if (max_len == 0) return;
  std::vector<std::vector<Word>> buckets(max_len + 1);
  buckets[1].push_back("0");
  if (max_len >= 4) {
    // Every other return word is 0001 t with t free of 000 and ending in 1.
    Word cur = "0001";
    auto dfs = [&](auto&& self, int zrun) -> void {
      if (cur.size() >= 4 && zrun == 0) buckets[cur.size()].push_back(cur);
      if (cur.size() == max_len) return;
      if (zrun < 2) {
        cur.push_back('0');
        self(self, zrun + 1);
        cur.pop_back();
      }
      cur.push_back('1');
      self(self, 0);
      cur.pop_back();
    };
    dfs(dfs, 0);
  }
  for (const auto& bucket : buckets) {
    for (const Word& w : bucket) sink(w);
  }
}

std::vector<Word> enumerate_return_words(std::size_t max_len) {
  std::vector<Word> out;
  enumerate_return_words(max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

TrajectoryAnnotation annotate_trajectory(const Word& u, const PotentialParams& params,
                                         const FactorOracle& oracle) {
  if (!is_return_word(u)) {
    throw std::invalid_argument("annotate_trajectory: not a return word of [000]");
  }
  const std::size_t n = u.size();
  if (n + 3 > oracle.max_query_length()) {
    throw std::invalid_argument("annotate_trajectory: oracle window too small");
  }
  const std::size_t N = static_cast<std::size_t>(params.excursion_threshold);

  TrajectoryAnnotation ann;
  ann.word = u;
  const Word padded = u + "000";
  const std::string_view pv{padded};

  ann.deltas.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ann.deltas.push_back(oracle.delta(pv.substr(k)).value);
  }
  ann.zones.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ann.zones.push_back(ann.deltas[k] >= N ? Zone::Excursion : Zone::Free);
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (ann.deltas[k] > ann.deltas[k - 1] - 1) {
      ann.accidents.push_back(Accident{k, ann.deltas[k]});
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    const bool was_free = ann.zones[k - 1] == Zone::Free;
    const bool is_free = ann.zones[k] == Zone::Free;
    if (was_free && !is_free) {
      ann.fe_transitions.push_back(k);
      const std::size_t prior = ann.deltas[k - 1];
      const Word entry = padded.substr(k, prior - 1);
      ann.entry_bispecials.push_back(entry);
      if (entry.size() > N - 2 ||
          rauzy::classify_word(entry, oracle).kind != rauzy::SpecialKind::bispecial) {
        throw std::logic_error("annotate_trajectory: FE entry word is not a short bispecial");
      }
    } else if (!was_free && is_free) {
      ann.ef_transitions.push_back(k);
      if (ann.deltas[k - 1] != N || ann.deltas[k] != N - 1) {
        throw std::logic_error("annotate_trajectory: EF transition without delta N -> N-1");
      }
      const Word exit = padded.substr(k, N - 1);
      ann.exit_words.push_back(exit);
      const auto kind = rauzy::classify_word(exit, oracle).kind;
      if (kind == rauzy::SpecialKind::right_special || kind == rauzy::SpecialKind::bispecial) {
        throw std::logic_error("annotate_trajectory: EF exit word is right special");
      }
    }
  }
  return ann;
}

double birkhoff_sum(const TrajectoryAnnotation& annotation, const PotentialParams& params) {
  CompensatedSum acc;
  for (std::size_t d : annotation.deltas) acc.add(potential_value(d, params));
  return acc.value();
}

double birkhoff_sum(const Word& u, const PotentialParams& params, const FactorOracle& oracle) {
  return birkhoff_sum(annotate_trajectory(u, params, oracle), params);
}

PartitionEstimate lambda_truncated(double beta, const PotentialParams& params,
                                   std::size_t max_len) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("lambda_truncated: beta must be positive");
  }
  PartitionEstimate est;
  est.beta = beta;
  est.params = params;
  est.max_len = max_len;
  est.per_length_counts.assign(max_len + 1, 0);
  if (max_len == 0) return est;

  const FactorOracle oracle(max_len + 3);
  CompensatedSum acc;
  enumerate_return_words(max_len, [&](const Word& u) {
    // Only the delta profile matters for the Birkhoff sum.
    const Word padded = u + "000";
    const std::string_view pv{padded};
    CompensatedSum s;
    for (std::size_t k = 0; k < u.size(); ++k) {
      s.add(potential_value(oracle.delta(pv.substr(k)).value, params));
    }
    acc.add(std::exp(beta * s.value()));
    ++est.num_return_words;
    ++est.per_length_counts[u.size()];
  });
  est.partial_sum = acc.value();
  return est;
}

EntryExitWords entry_exit_words(const PotentialParams& params, const FactorOracle& oracle) {
  const std::size_t N = static_cast<std::size_t>(params.excursion_threshold);
  if (N > oracle.max_query_length()) {
    throw std::invalid_argument("entry_exit_words: oracle window too small");
  }
  EntryExitWords out;
  for (std::size_t len = 1; len + 2 <= N; ++len) {
    for (const Word& w : oracle.factors_of(len)) {
      if (rauzy::classify_word(w, oracle).kind == rauzy::SpecialKind::bispecial) {
        out.entry.push_back(w);
      }
    }
  }
  for (const Word& w : oracle.factors_of(N - 1)) {
    const auto kind = rauzy::classify_word(w, oracle).kind;
    if (kind != rauzy::SpecialKind::right_special && kind != rauzy::SpecialKind::bispecial) {
      out.exit.push_back(w);
    }
  }
  return out;
}

bool classify_dw(const Word& u, const rauzy::BispecialLevel& level,
                 const PotentialParams& params, const FactorOracle& oracle) {
  const std::size_t N = static_cast<std::size_t>(params.excursion_threshold);
  if (level.w.size() < N) {
    throw std::invalid_argument("classify_dw: |W| must be at least N");
  }
  const auto ann = annotate_trajectory(u, params, oracle);

  // Condition 2: time 1 enters the excursion zone (and nothing re-enters).
  if (ann.fe_transitions.size() != 1 || ann.fe_transitions[0] != 1) return false;
  if (ann.ef_transitions.size() != 1) return false;

  // Conditions 3-4: exactly two excursion accidents beyond the entry, both
  // reading the bispecial W at their position.
  const Word padded = u + "000";
  std::vector<Accident> excursion_accidents;
  for (const Accident& a : ann.accidents) {
    if (a.time >= 2 && ann.zones[a.time] == Zone::Excursion) {
      excursion_accidents.push_back(a);
    }
  }
  if (excursion_accidents.size() != 2) return false;
  for (const Accident& a : excursion_accidents) {
    const std::size_t prior = ann.deltas[a.time - 1];
    if (prior - 1 != level.w.size()) return false;
    if (padded.compare(a.time, level.w.size(), level.w) != 0) return false;
  }

  // Condition 5: the exit word is the purely left-special word of length N-1.
  const Word pls = rauzy::special_words(static_cast<int>(N) - 1, oracle).left;
  if (ann.exit_words[0] != pls) return false;

  // Condition 6: the later W-accident is the last accident of the orbit.
  if (ann.accidents.back().time != excursion_accidents[1].time) return false;
  return true;
}

std::optional<Word> find_dw_member(const rauzy::BispecialLevel& level,
                                   const PotentialParams& params, const FactorOracle& oracle,
                                   std::size_t max_len) {
  const std::size_t N = static_cast<std::size_t>(params.excursion_threshold);
  if (max_len + 3 > oracle.max_query_length()) {
    throw std::invalid_argument("find_dw_member: oracle window too small");
  }
  if (max_len < 4) return std::nullopt;

  std::optional<Word> found;
  Word cur = "0001";
  // A window of length N failing membership pins an interior free time, and
  // D_W trajectories are free only at time 0 and after the exit; such a
  // branch can never classify, whatever is appended.
  auto dfs = [&](auto&& self, int zrun) -> void {
    if (found) return;
    const std::size_t len = cur.size();
    if (len >= N + 1) {
      const std::size_t j = len - N;
      if (j >= 1 && !oracle.is_factor(std::string_view(cur).substr(j, N))) return;
    }
    if (len >= 4 && zrun == 0 &&
        words::occurrences(level.w, cur).size() >= 2 &&
        classify_dw(cur, level, params, oracle)) {
      found = cur;
      return;
    }
    if (len == max_len) return;
    if (zrun < 2) {
      cur.push_back('0');
      self(self, zrun + 1);
      cur.pop_back();
      if (found) return;
    }
    cur.push_back('1');
    self(self, 0);
    cur.pop_back();
  };
  dfs(dfs, 0);
  return found;
}

std::optional<double> zeta(double beta, double tol) {
  if (!(beta > 1.0)) return std::nullopt;
  if (!(tol > 0.0)) {
    throw std::invalid_argument("zeta: tolerance must be positive");
  }
  // Direct sum to M, then the Euler-Maclaurin tail
  //   sum_{k>M} k^(-b) = M^(1-b)/(b-1) - M^(-b)/2 + b M^(-b-1)/12 - R,
  // with 0 < R < b(b+1)(b+2) M^(-b-3)/720.
  std::size_t M = 16;
  auto remainder = [&](double m) {
    return beta * (beta + 1.0) * (beta + 2.0) * std::pow(m, -beta - 3.0) / 720.0;
  };
  while (remainder(static_cast<double>(M)) > tol && M < (1u << 21)) M *= 2;

  CompensatedSum acc;
  for (std::size_t k = M; k >= 1; --k) {
    acc.add(std::pow(static_cast<double>(k), -beta));
  }
  const double m = static_cast<double>(M);
  acc.add(std::pow(m, 1.0 - beta) / (beta - 1.0));
  acc.add(-0.5 * std::pow(m, -beta));
  acc.add(beta * std::pow(m, -beta - 1.0) / 12.0);
  return acc.value();
}

LevelsPQ levels_pq(const PotentialParams& params) {
  const double N = static_cast<double>(params.excursion_threshold);
  LevelsPQ out;
  int p = 1;
  while (std::pow(kGamma, p) < N) ++p;
  out.p_level = p;
  int q = 1;
  while (std::pow(kGamma, q + 1) < N) ++q;
  out.q_level = q;

  p = 2;
  while (static_cast<double>(words::fib_number(p)) - 2.0 < N) ++p;
  out.p_bispecial = p;
  q = 2;
  while (static_cast<double>(words::fib_number(q + 1)) - 2.0 <= N - 1.0) ++q;
  out.q_bispecial = q;

  out.consistent = out.p_level == out.p_bispecial && out.q_level == out.q_bispecial;
  if (out.p_level != out.q_level + 1) {
    throw std::logic_error("levels_pq: expected P = Q + 1");
  }
  return out;
}

BoundReport lower_bound(double beta, const PotentialParams& params) {
  if (!(beta > 1.0)) {
    throw std::invalid_argument("lower_bound: beta must exceed 1");
  }
  BoundReport r;
  r.beta = beta;
  r.params = params;
  r.gamma = kGamma;
  r.zeta_beta = *zeta(beta);
  r.t0_lower = r.zeta_beta - 1.0;
  r.tv_scale = r.zeta_beta;
  const auto lev = levels_pq(params);
  r.P = lev.p_level;
  r.Q = lev.q_level;

  const auto z1 = zeta(beta - 1.0);
  if (!z1) {
    r.zeta_beta_minus_1 = kInf;
    r.tw_lower = kInf;
    r.vacuous = false;
    r.bound = kInf;
    return r;
  }
  r.zeta_beta_minus_1 = *z1;
  r.tw_lower = *z1 - 2.0 * r.zeta_beta;
  r.vacuous = r.tw_lower <= 0.0;
  r.bound = std::exp(-static_cast<double>(params.excursion_threshold) * params.free_penalty) *
            r.t0_lower * r.t0_lower * r.tw_lower / (std::pow(kGamma, beta) - 1.0);
  return r;
}

ExclusionReport beta_c_exclusion(const PotentialParams& params,
                                 const std::vector<double>& betas) {
  ExclusionReport report;
  report.params = params;
  for (double b : betas) {
    if (!(b > 1.0) || b > 2.0) {
      throw std::invalid_argument("beta_c_exclusion: beta must lie in (1,2], got " +
                                  std::to_string(b));
    }
    report.entries.push_back(ExclusionEntry{b, lower_bound(b, params).bound});
  }
  // Truncated sums sample the monotonicity that extends the verdict to ]0,1].
  report.lambda_sample_betas = {0.5, 1.0, 1.5, 2.0};
  for (double b : report.lambda_sample_betas) {
    report.lambda_sample_values.push_back(lambda_truncated(b, params, 14).partial_sum);
  }
  report.lambda_monotone_decreasing = true;
  for (std::size_t i = 1; i < report.lambda_sample_values.size(); ++i) {
    if (!(report.lambda_sample_values[i] < report.lambda_sample_values[i - 1])) {
      report.lambda_monotone_decreasing = false;
    }
  }
  report.excluded = report.lambda_monotone_decreasing &&
                    std::all_of(report.entries.begin(), report.entries.end(),
                                [](const ExclusionEntry& e) { return std::isinf(e.bound); });
  return report;
}

double hofbauer_beta_c(double A) {
  if (!(A > 0.0)) {
    throw std::invalid_argument("hofbauer_beta_c: A must be positive");
  }
  const double target = std::exp(A);
  // zeta decreases strictly from +inf to 1 on (1, inf); bracket then bisect.
  double lo = 1.0 + 1e-6;
  while (*zeta(lo) < target) lo = 1.0 + (lo - 1.0) / 2.0;
  double hi = 2.0;
  while (*zeta(hi) > target) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (*zeta(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace thermo
}  // namespace fibthermo
