#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"

namespace fibthermo {
namespace thermo {

struct PotentialParams {
  int excursion_threshold = 0;  // N: delta >= N puts the orbit in the excursion zone
  double free_penalty = 0.0;    // A: the potential equals -A on the free zone
};

// Enforces N >= 5, N-1 distinct from every F(n)-2, and A > 0, with a
// distinct diagnostic for each violation.
PotentialParams validate_params(int N, double A);

// -log(1 + 1/delta) on the excursion zone, -A on the free zone.
double potential_value(std::size_t delta_value, const PotentialParams& params);

// Return word of the cylinder [000] in the full shift: in u000, "000" occurs
// at position 0, at position |u|, and nowhere strictly in between.
bool is_return_word(std::string_view u);

// All return words of length <= max_len, ordered by (length, lexicographic).
void enumerate_return_words(std::size_t max_len, const std::function<void(const Word&)>& sink);
std::vector<Word> enumerate_return_words(std::size_t max_len);

enum class Zone { Free, Excursion };

struct Accident {
  std::size_t time = 0;
  std::size_t depth = 0;  // delta value at the accident
};

struct TrajectoryAnnotation {
  Word word;
  std::vector<std::size_t> deltas;  // delta of u_k ... u_{n-1} 000 for each k
  std::vector<Zone> zones;
  std::vector<Accident> accidents;
  std::vector<std::size_t> fe_transitions;
  std::vector<std::size_t> ef_transitions;
  std::vector<Word> entry_bispecials;  // aligned with fe_transitions
  std::vector<Word> exit_words;        // aligned with ef_transitions
};

// Full delta profile of the return trajectory u 000. Three tail symbols
// determine every delta exactly: no factor of omega crosses three zeros.
// The entry/exit propositions are asserted as they are recorded.
TrajectoryAnnotation annotate_trajectory(const Word& u, const PotentialParams& params,
                                         const words::FactorOracle& oracle);

double birkhoff_sum(const TrajectoryAnnotation& annotation, const PotentialParams& params);
double birkhoff_sum(const Word& u, const PotentialParams& params,
                    const words::FactorOracle& oracle);

struct PartitionEstimate {
  double beta = 0.0;
  PotentialParams params;
  std::size_t max_len = 0;
  double partial_sum = 0.0;
  std::size_t num_return_words = 0;
  std::vector<std::size_t> per_length_counts;  // index 1..max_len
};

// Truncation of the return-word partition sum: terms exp(beta * S_{|u|} phi)
// over return words of length <= max_len, accumulated with compensated
// summation in enumeration order.
PartitionEstimate lambda_truncated(double beta, const PotentialParams& params,
                                   std::size_t max_len);

struct EntryExitWords {
  std::vector<Word> entry;  // bispecial words of length <= N-2
  std::vector<Word> exit;   // non-right-special words of length N-1
};

EntryExitWords entry_exit_words(const PotentialParams& params,
                                const words::FactorOracle& oracle);

// Membership in the trajectory family D_W: FE-transition at time 1, exactly
// two excursion accidents both reading the bispecial W, exit through the
// purely left-special word of length N-1, no accident afterwards.
bool classify_dw(const Word& u, const rauzy::BispecialLevel& level,
                 const PotentialParams& params, const words::FactorOracle& oracle);

// Depth-first search for a D_W member among return words of length <= max_len.
// Prunes any branch that puts an interior position in the free zone.
std::optional<Word> find_dw_member(const rauzy::BispecialLevel& level,
                                   const PotentialParams& params,
                                   const words::FactorOracle& oracle, std::size_t max_len);

// Riemann zeta via direct summation with Euler-Maclaurin tail corrections;
// nullopt for beta <= 1 where the series diverges.
std::optional<double> zeta(double beta, double tol = 1e-12);

struct LevelsPQ {
  int p_level = 0;       // least p with gamma^p >= N
  int q_level = 0;       // greatest q with gamma^q < N
  int p_bispecial = 0;   // least p with F(p)-2 >= N
  int q_bispecial = 0;   // greatest q with F(q)-2 <= N-1
  bool consistent = false;
};

LevelsPQ levels_pq(const PotentialParams& params);

struct BoundReport {
  double beta = 0.0;
  PotentialParams params;
  double zeta_beta = 0.0;
  double zeta_beta_minus_1 = 0.0;  // +inf when beta <= 2
  double t0_lower = 0.0;           // zeta(beta) - 1
  double tw_lower = 0.0;           // zeta(beta-1) - 2 zeta(beta), +inf when beta <= 2
  double tv_scale = 0.0;           // zeta(beta)
  int P = 0;
  int Q = 0;
  double gamma = 0.0;
  double bound = 0.0;              // +inf when beta <= 2
  bool vacuous = false;            // tw_lower <= 0: true but uninformative
};

// Closed-form lower bound exp(-N A) (zeta(b)-1)^2 (zeta(b-1)-2 zeta(b)) / (gamma^b - 1).
BoundReport lower_bound(double beta, const PotentialParams& params);

struct ExclusionEntry {
  double beta = 0.0;
  double bound = 0.0;
};

struct ExclusionReport {
  PotentialParams params;
  std::vector<ExclusionEntry> entries;
  std::vector<double> lambda_sample_betas;
  std::vector<double> lambda_sample_values;
  bool lambda_monotone_decreasing = false;
  bool excluded = false;  // verdict for the interval ]0,2]
};

// For each beta in (1,2] the bound diverges, so the truncated partition sum
// cannot equal 1 there; monotonicity of the truncated sums extends the
// exclusion down to ]0,1].
ExclusionReport beta_c_exclusion(const PotentialParams& params,
                                 const std::vector<double>& betas);

// Unique beta > 1 with zeta(beta) = exp(A), by bisection to 1e-9.
double hofbauer_beta_c(double A);

}  // namespace thermo
}  // namespace fibthermo
