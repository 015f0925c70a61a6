#include "fibthermo/rauzy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fibthermo {
namespace rauzy {

using words::FactorOracle;

const char* to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::ordinary: return "ordinary";
    case SpecialKind::left_special: return "left_special";
    case SpecialKind::right_special: return "right_special";
    case SpecialKind::bispecial: return "bispecial";
  }
  return "?";
}

SpecialClassification classify_word(std::string_view u, const FactorOracle& oracle) {
  if (!oracle.is_factor(u)) {
    throw std::invalid_argument("classify_word: word is not a factor of omega");
  }
  if (u.size() + 1 > oracle.max_query_length()) {
    throw std::invalid_argument("classify_word: oracle window too small for extensions");
  }
  SpecialClassification out;
  for (char c : {'0', '1'}) {
    Word left = c + Word(u);
    if (oracle.is_factor(left)) out.left_extensions.push_back(c);
    Word right = Word(u) + c;
    if (oracle.is_factor(right)) out.right_extensions.push_back(c);
  }
  const bool ls = out.left_extensions.size() == 2;
  const bool rs = out.right_extensions.size() == 2;
  out.kind = ls && rs   ? SpecialKind::bispecial
             : ls       ? SpecialKind::left_special
             : rs       ? SpecialKind::right_special
                        : SpecialKind::ordinary;
  return out;
}

RauzyGraph build_rauzy(int n, const FactorOracle& oracle) {
  if (n < 1) {
    throw std::invalid_argument("build_rauzy: order must be positive");
  }
  if (static_cast<std::size_t>(n) + 1 > oracle.max_query_length()) {
    throw std::invalid_argument("build_rauzy: oracle window too small");
  }
  RauzyGraph g;
  g.order = n;
  g.vertices = oracle.factors_of(static_cast<std::size_t>(n));
  for (const Word& w : oracle.factors_of(static_cast<std::size_t>(n) + 1)) {
    g.edges.push_back(RauzyEdge{w.substr(0, static_cast<std::size_t>(n)),
                                w.substr(1, static_cast<std::size_t>(n)),
                                w.back(), w.front()});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const RauzyEdge& a, const RauzyEdge& b) {
    return std::tie(a.from, a.appended) < std::tie(b.from, b.appended);
  });

  std::map<Word, int> outdeg, indeg;
  for (const auto& e : g.edges) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  int branches = 0, merges = 0;
  for (const auto& [v, d] : outdeg) {
    if (d == 2) {
      g.branch_vertex = v;
      ++branches;
    }
  }
  for (const auto& [v, d] : indeg) {
    if (d == 2) {
      g.merge_vertex = v;
      ++merges;
    }
  }
  if (branches != 1 || merges != 1) {
    throw std::logic_error("build_rauzy: expected exactly one branching and one merging vertex");
  }
  return g;
}

SpecialWords special_words(int n, const FactorOracle& oracle) {
  if (n < 1) {
    throw std::invalid_argument("special_words: length must be positive");
  }
  SpecialWords out;
  int lefts = 0, rights = 0;
  for (const Word& w : oracle.factors_of(static_cast<std::size_t>(n))) {
    const auto cls = classify_word(w, oracle);
    if (cls.left_extensions.size() == 2) {
      out.left = w;
      ++lefts;
    }
    if (cls.right_extensions.size() == 2) {
      out.right = w;
      ++rights;
    }
  }
  if (lefts != 1 || rights != 1) {
    throw std::logic_error("special_words: expected exactly one left and one right special word");
  }
  return out;
}

BispecialLevel bispecial_level(int p, const FactorOracle& oracle) {
  if (p < 2) {
    throw std::invalid_argument("bispecial_level: p must be at least 2");
  }
  const std::size_t n = static_cast<std::size_t>(words::fib_number(p) - 2);
  const RauzyGraph g = build_rauzy(static_cast<int>(n), oracle);
  if (g.branch_vertex != g.merge_vertex) {
    throw std::logic_error("bispecial_level: no bispecial vertex at order " + std::to_string(n));
  }
  const Word& w = g.branch_vertex;

  std::map<Word, std::vector<const RauzyEdge*>> out_edges;
  for (const auto& e : g.edges) out_edges[e.from].push_back(&e);

  // Two disjoint loops at w; read off the appended labels of each walk.
  std::vector<Word> loops;
  for (const RauzyEdge* first : out_edges[w]) {
    Word label(1, first->appended);
    Word cur = first->to;
    while (cur != w) {
      const auto& outs = out_edges[cur];
      if (outs.size() != 1) {
        throw std::logic_error("bispecial_level: unexpected branching inside a factor loop");
      }
      label.push_back(outs[0]->appended);
      cur = outs[0]->to;
    }
    loops.push_back(std::move(label));
  }
  if (loops.size() != 2) {
    throw std::logic_error("bispecial_level: expected two loops at the bispecial vertex");
  }
  if (loops[0].size() < loops[1].size()) std::swap(loops[0], loops[1]);
  if (loops[0].size() != words::fib_number(p - 1) || loops[1].size() != words::fib_number(p - 2)) {
    throw std::logic_error("bispecial_level: loop lengths do not match F(p-1), F(p-2)");
  }
  return BispecialLevel{p, w, std::move(loops[0]), std::move(loops[1])};
}

BispecialLevel hierarchy_level(const BispecialLevel& base, int n) {
  if (n < 0) {
    throw std::invalid_argument("hierarchy_level: step count must be non-negative");
  }
  BispecialLevel cur = base;
  for (int i = 0; i < n; ++i) {
    Word w = cur.w + cur.r1;
    Word r1 = cur.r2 + cur.r1;
    Word r2 = cur.r1;
    cur = BispecialLevel{cur.p + 1, std::move(w), std::move(r1), std::move(r2)};
  }
  return cur;
}

Word phi_encode(const LoopIndexSeq& seq) {
  Word out;
  out.reserve(seq.size());
  for (char c : seq) {
    if (c == '1') {
      out.push_back('0');
    } else if (c == '2') {
      out.push_back('1');
    } else {
      throw std::invalid_argument("phi_encode: loop indices must be '1' or '2'");
    }
  }
  return out;
}

Word phi_decode(std::string_view w, const BispecialLevel& level) {
  words::require_binary(w);
  Word out;
  for (char c : w) out += (c == '0') ? level.r1 : level.r2;
  return out;
}

Word append_loops(const BispecialLevel& level, const LoopIndexSeq& seq) {
  Word out;
  for (char c : seq) {
    if (c == '1') {
      out += level.r1;
    } else if (c == '2') {
      out += level.r2;
    } else {
      throw std::invalid_argument("append_loops: loop indices must be '1' or '2'");
    }
  }
  return out;
}

LoopLanguage loop_language(const BispecialLevel& level, int n, const FactorOracle& oracle) {
  if (n < 1) {
    throw std::invalid_argument("loop_language: n must be positive");
  }
  const std::size_t worst = level.w.size() + static_cast<std::size_t>(n) * level.r1.size();
  if (worst > oracle.max_query_length()) {
    throw std::invalid_argument("loop_language: oracle window too small for length " +
                                std::to_string(worst));
  }
  LoopLanguage out;
  out.level = level;
  out.n = n;

  // Prefixes of factors are factors, so partial concatenations prune exactly.
  Word cur = level.w;
  LoopIndexSeq seq;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == n) {
      out.sequences.push_back(seq);
      return;
    }
    for (char idx : {'1', '2'}) {
      const Word& block = (idx == '1') ? level.r1 : level.r2;
      cur += block;
      if (oracle.is_factor(cur)) {
        seq.push_back(idx);
        self(self);
        seq.pop_back();
      }
      cur.resize(cur.size() - block.size());
    }
  };
  dfs(dfs);
  return out;
}

BicephalicSet bicephalic_set(const BispecialLevel& level, int n, const FactorOracle& oracle) {
  if (n < 1) {
    throw std::invalid_argument("bicephalic_set: n must be positive");
  }
  BicephalicSet out;
  if (n == 1) {
    out.words.push_back(level.w);
  } else {
    for (const auto& seq : loop_language(level, n - 1, oracle).sequences) {
      out.words.push_back(level.w + append_loops(level, seq));
    }
    std::sort(out.words.begin(), out.words.end());
  }
  for (const Word& w : out.words) {
    if (classify_word(w, oracle).kind != SpecialKind::ordinary) {
      out.specials.push_back(w);
    }
  }
  out.special_count = static_cast<int>(out.specials.size());
  return out;
}

Word xi_palindrome_prefix(int n) {
  if (n < 2) {
    throw std::invalid_argument("xi_palindrome_prefix: n must be at least 2");
  }
  Word w = words::fib_word(n);
  return w.substr(0, w.size() - 2);
}

std::string export_dot(const RauzyGraph& graph) {
  std::map<Word, int> outdeg, indeg;
  for (const auto& e : graph.edges) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  std::string out = "digraph rauzy_" + std::to_string(graph.order) + " {\n";
  out += "  rankdir=LR;\n";
  for (const Word& v : graph.vertices) {
    const bool branch = outdeg[v] == 2;
    const bool merge = indeg[v] == 2;
    out += "  \"" + v + "\"";
    if (branch && merge) {
      out += " [shape=doublecircle,xlabel=\"bispecial\"]";
    } else if (branch) {
      out += " [shape=diamond,xlabel=\"right special\"]";
    } else if (merge) {
      out += " [shape=box,xlabel=\"left special\"]";
    }
    out += ";\n";
  }
  for (const auto& e : graph.edges) {
    out += "  \"" + e.from + "\" -> \"" + e.to + "\" [label=\"" + e.appended + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rauzy
}  // namespace fibthermo
