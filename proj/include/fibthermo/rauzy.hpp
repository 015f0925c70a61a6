#pragma once

#include <string>
#include <vector>

#include "fibthermo/fib_words.hpp"

namespace fibthermo {
namespace rauzy {

enum class SpecialKind { ordinary, left_special, right_special, bispecial };

const char* to_string(SpecialKind k);

struct SpecialClassification {
  SpecialKind kind = SpecialKind::ordinary;
  std::string left_extensions;   // subset of "01", sorted
  std::string right_extensions;  // subset of "01", sorted
};

// Extension sets of u in L(omega); u itself must be a factor.
SpecialClassification classify_word(std::string_view u, const words::FactorOracle& oracle);

struct RauzyEdge {
  Word from;
  Word to;
  char appended;   // from + appended = prepended + to in L_{n+1}(omega)
  char prepended;
};

struct RauzyGraph {
  int order = 0;
  std::vector<Word> vertices;    // L_n(omega), sorted
  std::vector<RauzyEdge> edges;  // sorted by (from, appended)
  Word branch_vertex;            // unique vertex with outdegree 2 (A_n)
  Word merge_vertex;             // unique vertex with indegree 2 (B_n)
};

RauzyGraph build_rauzy(int n, const words::FactorOracle& oracle);

struct SpecialWords {
  Word left;
  Word right;
};

// The unique left-special and right-special words of length n.
SpecialWords special_words(int n, const words::FactorOracle& oracle);

// Bispecial word of length F(p) - 2 together with its two factor loops,
// |r1| = F(p-1) > |r2| = F(p-2).
struct BispecialLevel {
  int p = 0;
  Word w;
  Word r1;
  Word r2;
};

// Reads W and the loops off the two disjoint cycles at the bispecial vertex
// of the Rauzy graph of order |W|.
BispecialLevel bispecial_level(int p, const words::FactorOracle& oracle);

// Advance a level n steps: W <- W R1, R1 <- R2 R1, R2 <- R1.
BispecialLevel hierarchy_level(const BispecialLevel& base, int n);

// Loop-index sequences are strings over '1'/'2' (indices into {R1, R2}).
using LoopIndexSeq = std::string;

// Block-digit code: R1 -> '0', R2 -> '1'.
Word phi_encode(const LoopIndexSeq& seq);

// Inverse: '0' -> R1, '1' -> R2, concatenated as concrete symbols.
Word phi_decode(std::string_view w, const BispecialLevel& level);

// Concatenation R_{i1} ... R_{ik} for an index sequence.
Word append_loops(const BispecialLevel& level, const LoopIndexSeq& seq);

struct LoopLanguage {
  BispecialLevel level;
  int n = 0;
  std::vector<LoopIndexSeq> sequences;  // sorted (DFS with '1' before '2')
};

// All index sequences of length n with W R_{i1} ... R_{in} in L(omega).
LoopLanguage loop_language(const BispecialLevel& level, int n,
                           const words::FactorOracle& oracle);

struct BicephalicSet {
  std::vector<Word> words;  // sorted lexicographically
  int special_count = 0;
  std::vector<Word> specials;
};

// { W V : V in L_{n-1}(Omega_W) }; for n = 1 the set is {W} itself.
BicephalicSet bicephalic_set(const BispecialLevel& level, int n,
                             const words::FactorOracle& oracle);

// Palindrome prefix xi_n with omega_n = xi_n plus its last two symbols.
Word xi_palindrome_prefix(int n);

// Deterministic DOT rendering; special vertices are annotated by shape.
std::string export_dot(const RauzyGraph& graph);

}  // namespace rauzy
}  // namespace fibthermo
