#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"

using namespace fibthermo;
using namespace fibthermo::rauzy;
using words::FactorOracle;

namespace {
std::set<std::string> edge_set(const RauzyGraph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges) out.insert(e.from + ">" + e.to);
  return out;
}
}  // namespace

TEST_CASE("small Rauzy graphs") {
  FactorOracle oracle(12);

  const RauzyGraph g1 = build_rauzy(1, oracle);
  CHECK(g1.vertices == std::vector<Word>{"0", "1"});
  CHECK(edge_set(g1) == std::set<std::string>{"0>0", "0>1", "1>0"});
  CHECK(g1.edges.size() == 3);

  const RauzyGraph g2 = build_rauzy(2, oracle);
  CHECK(g2.vertices == std::vector<Word>{"00", "01", "10"});
  CHECK(edge_set(g2) == std::set<std::string>{"00>01", "01>10", "10>00", "10>01"});
  CHECK(g2.branch_vertex == "10");
  CHECK(g2.merge_vertex == "01");

  const RauzyGraph g3 = build_rauzy(3, oracle);
  CHECK(g3.vertices.size() == 4);
  CHECK(g3.edges.size() == 5);
  CHECK(g3.branch_vertex == "010");
  CHECK(g3.merge_vertex == "010");

  for (const auto& e : g3.edges) {
    CHECK(e.from + e.appended == e.prepended + e.to);
    CHECK(oracle.is_factor(e.from + e.appended));
  }
}

TEST_CASE("classification of short factors") {
  FactorOracle oracle(12);
  auto cls = classify_word("0", oracle);
  CHECK(cls.kind == SpecialKind::bispecial);
  CHECK(cls.left_extensions == "01");
  CHECK(cls.right_extensions == "01");

  CHECK(classify_word("10", oracle).kind == SpecialKind::right_special);
  cls = classify_word("00", oracle);
  CHECK(cls.kind == SpecialKind::ordinary);
  CHECK(cls.left_extensions == "1");
  CHECK(cls.right_extensions == "1");

  CHECK(classify_word("", oracle).kind == SpecialKind::bispecial);
  CHECK_THROWS_AS(classify_word("11", oracle), std::invalid_argument);
}

TEST_CASE("unique special words per length") {
  FactorOracle oracle(12);
  auto sw = special_words(2, oracle);
  CHECK(sw.left == "01");
  CHECK(sw.right == "10");
  sw = special_words(1, oracle);
  CHECK(sw.left == "0");
  CHECK(sw.right == "0");
  sw = special_words(3, oracle);
  CHECK(sw.left == "010");
  CHECK(sw.right == "010");
}

TEST_CASE("bispecial levels from the graph loops") {
  FactorOracle oracle(40);
  auto lvl = bispecial_level(2, oracle);
  CHECK(lvl.w == "0");
  CHECK(lvl.r1 == "10");
  CHECK(lvl.r2 == "0");

  lvl = bispecial_level(3, oracle);
  CHECK(lvl.w == "010");
  CHECK(lvl.r1 == "010");
  CHECK(lvl.r2 == "10");

  lvl = bispecial_level(4, oracle);
  CHECK(lvl.w == "010010");
  CHECK(lvl.r1.size() == 5);
  CHECK(lvl.r2.size() == 3);
  CHECK(oracle.is_factor(lvl.w + lvl.r1));
  CHECK(oracle.is_factor(lvl.w + lvl.r2));
  CHECK(lvl.w == words::fib_prefix(lvl.w.size()));
  CHECK(lvl.w == words::mirror(lvl.w));
}

TEST_CASE("hierarchy recursion matches direct extraction") {
  FactorOracle oracle(146);
  const auto base = bispecial_level(2, oracle);

  auto lvl = hierarchy_level(base, 1);
  CHECK(lvl.w == "010");
  CHECK(lvl.r1 == "010");
  CHECK(lvl.r2 == "10");

  CHECK(hierarchy_level(base, 2).w == "010010");
  CHECK(hierarchy_level(base, 2).w.size() == words::fib_number(4) - 2);

  lvl = hierarchy_level(base, 0);
  CHECK(lvl.w == base.w);
  CHECK(lvl.r1 == base.r1);
  CHECK(lvl.r2 == base.r2);

  for (int n = 1; n <= 5; ++n) {
    const auto direct = bispecial_level(2 + n, oracle);
    const auto rec = hierarchy_level(base, n);
    CHECK(rec.w == direct.w);
    CHECK(rec.r1 == direct.r1);
    CHECK(rec.r2 == direct.r2);
  }
}

TEST_CASE("phi coding") {
  FactorOracle oracle(20);
  const auto base = bispecial_level(2, oracle);
  CHECK(phi_encode("121") == "010");
  CHECK(phi_encode("212") == "101");
  CHECK(phi_decode("10", base) == "010");
  CHECK(phi_decode("10", base) == hierarchy_level(base, 1).r1);
  CHECK_THROWS_AS(phi_encode("103"), std::invalid_argument);
  CHECK_THROWS_AS(phi_decode("102", base), std::invalid_argument);
}

TEST_CASE("loop language enumeration") {
  FactorOracle oracle(40);
  const auto base = bispecial_level(2, oracle);

  auto ll = loop_language(base, 3, oracle);
  CHECK(ll.sequences == std::vector<LoopIndexSeq>{"112", "121", "211", "212"});

  ll = loop_language(base, 1, oracle);
  CHECK(ll.sequences == std::vector<LoopIndexSeq>{"1", "2"});

  const auto lvl3 = bispecial_level(3, oracle);
  ll = loop_language(lvl3, 2, oracle);
  CHECK(ll.sequences.size() == 3);
  std::set<Word> image;
  for (const auto& s : ll.sequences) image.insert(phi_encode(s));
  CHECK(image == std::set<Word>{"00", "01", "10"});

  // Round trip: decoding the phi image rebuilds the loop concatenation.
  for (const auto& s : ll.sequences) {
    CHECK(phi_decode(phi_encode(s), lvl3) == append_loops(lvl3, s));
  }
}

TEST_CASE("bicephalic sets") {
  FactorOracle oracle(40);
  const auto base = bispecial_level(2, oracle);

  auto bs = bicephalic_set(base, 2, oracle);
  CHECK(bs.words == std::vector<Word>{"00", "010"});
  CHECK(bs.special_count == 1);
  CHECK(bs.specials == std::vector<Word>{"010"});

  bs = bicephalic_set(base, 3, oracle);
  CHECK(bs.words.size() == 3);
  CHECK(bs.special_count == 2);

  bs = bicephalic_set(base, 4, oracle);
  CHECK(bs.words.size() == 4);
  CHECK(bs.special_count == 1);

  bs = bicephalic_set(base, 1, oracle);
  CHECK(bs.words == std::vector<Word>{"0"});
  CHECK(bs.special_count == 1);

  for (int n = 1; n <= 10; ++n) {
    for (const Word& u : bicephalic_set(base, n, oracle).words) {
      CHECK(words::occurrences(base.w, u).size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("xi palindrome prefixes") {
  CHECK(xi_palindrome_prefix(2) == "0");
  CHECK(xi_palindrome_prefix(3) == "010");
  CHECK(xi_palindrome_prefix(4) == "010010");
  CHECK_THROWS_AS(xi_palindrome_prefix(1), std::invalid_argument);
  for (int n = 2; n <= 12; ++n) {
    const Word xi = xi_palindrome_prefix(n);
    CHECK(xi.size() == words::fib_number(n) - 2);
    CHECK(xi == words::mirror(xi));
  }
}

TEST_CASE("dot export") {
  FactorOracle oracle(12);
  const std::string dot1 = export_dot(build_rauzy(1, oracle));
  CHECK(dot1 ==
        "digraph rauzy_1 {\n"
        "  rankdir=LR;\n"
        "  \"0\" [shape=doublecircle,xlabel=\"bispecial\"];\n"
        "  \"1\";\n"
        "  \"0\" -> \"0\" [label=\"0\"];\n"
        "  \"0\" -> \"1\" [label=\"1\"];\n"
        "  \"1\" -> \"0\" [label=\"0\"];\n"
        "}\n");

  const std::string dot2 = export_dot(build_rauzy(2, oracle));
  CHECK(dot2.find("\"10\" [shape=diamond") != std::string::npos);
  CHECK(dot2.find("\"01\" [shape=box") != std::string::npos);

  const std::string dot3 = export_dot(build_rauzy(3, oracle));
  CHECK(dot3.find("\"010\" [shape=doublecircle") != std::string::npos);
}
