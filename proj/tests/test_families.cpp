#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "fpres/families.hpp"
#include "fpres/fsa.hpp"
#include "fpres/matrix.hpp"
#include "fpres/transform.hpp"

using namespace fpres;

TEST_SUITE_BEGIN("families");

TEST_CASE("family constructors match their defining displays") {
  Presentation r22 = make_family(Family::R, 2, 2);
  CHECK(r22.kind == Kind::monoid);
  CHECK(r22.relations[0].first == parse_word("b a a b a a a a b a a b a"));
  CHECK(r22.relations[0].second == parse_word("a"));

  Presentation bs = make_family(Family::BS_graph, 2, 2);
  CHECK(bs.generators == std::vector<std::string>{"d", "c0", "c1"});
  REQUIRE(bs.relations.size() == 2);
  CHECK(bs.relations[0].first == parse_word("c0 c0 d c0^-1 c0^-1 d^-1"));

  Presentation g11 = make_family(Family::G, 1, 1);
  CHECK(g11.relations[0].first == parse_word("x y x y^-1"));

  Presentation k = make_family(Family::K_target, 2, 2);
  CHECK(k.generators.size() == 5);
  CHECK(k.relations.size() == 4);

  Presentation bp3 = make_family(Family::BP3, 3, 1);
  CHECK(bp3.generators == std::vector<std::string>{"w0", "w1", "w2"});
  CHECK(bp3.relations[1].first ==
        parse_word("w0 w1 w1 w1 w0^-1 w1^-1 w1^-1 w1^-1"));

  // tripled variant: literal letter substitution on both sides of R
  Presentation trip = make_family(Family::R_tripled, 2, 2);
  CHECK(trip.relations[0].second == parse_word("a a a"));
  CHECK(trip.relations[0].first.size() == 3 * 13);

  Presentation tc = make_family(Family::T_compression, 1, 1);
  CHECK(tc.generators == std::vector<std::string>{"z", "t"});
  CHECK(tc.relations[0].second == parse_word("z t"));
}

TEST_CASE("the relator length identity and both constructions agree") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      Word relator = r_relator_lhs(m, n);
      CHECK(relator.size() == static_cast<std::size_t>(2 * m * (n + 1) + 1));

      // independent letter-for-letter construction
      Word direct;
      for (int i = 0; i < m; ++i) {
        direct *= Word::letter("b");
        for (int j = 0; j < n; ++j) direct *= Word::letter("a");
      }
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) direct *= Word::letter("a");
        direct *= Word::letter("b");
      }
      direct *= Word::letter("a");
      CHECK(relator == direct);
    }
  }
}

TEST_CASE("group witnesses and their abelianized span") {
  auto w = p4_group_witnesses(2, 2);
  CHECK(w[0] == parse_word("y x x y^-1"));
  CHECK(w[1] == parse_word("y y y y"));
  CHECK(w[2] == parse_word("x x"));
  CHECK(w[3] == parse_word("x y y y y x^-1"));
  CHECK_THROWS_AS(p4_group_witnesses(1, 2), std::invalid_argument);

  // substituting y -> a, x -> b a^n gives honestly mixed-sign words
  Presentation gmn = make_family(Family::G, 2, 2);
  Presentation m22 = make_family(Family::M, 2, 2);
  Homomorphism sub{gmn, m22, {}};
  sub.target.kind = Kind::group;  // allow inverse letters in images
  sub.images["y"] = Word::letter("a");
  sub.images["x"] = Word::letter("b") * pow(Word::letter("a"), 2);
  bool some_negative = false;
  for (const Word& witness : w) {
    Word image = free_reduce(apply(sub, witness));
    for (const Symbol& s : image.syms) some_negative |= s.sign < 0;
  }
  CHECK(some_negative);

  // abelianized images live in Z^2, so their span has rank at most 2
  IntMatrix exps(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (const Symbol& s : w[i].syms)
      exps.at(i, s.name == "x" ? 0 : 1) += s.sign;
  }
  CHECK(smith_diagonal(exps).size() <= 2);
}

TEST_CASE("trace witnesses instantiate and factor over {a, ba}") {
  auto w = p4_trace_witnesses(2, 2);
  CHECK(w[0] == parse_word("a b a a b a"));
  CHECK(w[1] == parse_word("a a a a"));
  CHECK(w[2] == parse_word("b a a b a a"));
  CHECK(w[3] == parse_word("b a a a a a a b a a"));
  for (const Word& witness : w) CHECK(factors_over_a_ba(witness));
  CHECK_FALSE(factors_over_a_ba(parse_word("a b")));
  CHECK_FALSE(factors_over_a_ba(parse_word("b b a")));
}

TEST_CASE("witness commutation pattern equals adjacency across parameters") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const CompleteSystem cs = certified_fcrs(m, n);
    auto w = p4_trace_witnesses(m, n);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const bool commute = cs.normal_form(w[i] * w[j]) == cs.normal_form(w[j] * w[i]);
        CHECK(commute == (j == i + 1));
      }
    }
  }
}

TEST_CASE("trace normal form picks the shortlex-least class member") {
  TraceGraph p4 = TraceGraph::path({"u1", "u2", "u3", "u4"});
  CHECK(foata_normal_form(p4, parse_word("u2 u1")) == parse_word("u1 u2"));
  CHECK(foata_normal_form(p4, parse_word("u3 u1")) == parse_word("u3 u1"));
  CHECK(foata_normal_form(p4, parse_word("u4 u3 u2")) == parse_word("u3 u4 u2"));
  // swap closure: u4u3u2 ~ u3u4u2 ~ u4u2u3
  CHECK(trace_class(p4, parse_word("u4 u3 u2")) ==
        std::set<Word>{parse_word("u4 u3 u2"), parse_word("u3 u4 u2"),
                       parse_word("u4 u2 u3")});
}

TEST_CASE("trace form is a class invariant on all short words") {
  TraceGraph p4 = TraceGraph::path({"u1", "u2", "u3", "u4"});
  std::vector<Word> all{Word{}};
  for (int len = 0; len < 5; ++len) {
    std::vector<Word> next;
    for (const Word& w : all) {
      if (w.size() == static_cast<std::size_t>(len)) {
        for (int g = 1; g <= 4; ++g) next.push_back(w * Word::letter("u" + std::to_string(g)));
      }
    }
    for (Word& w : next) all.push_back(std::move(w));
  }
  for (const Word& w : all) {
    if (w.empty()) continue;
    Word form = foata_normal_form(p4, w);
    CHECK(foata_normal_form(p4, form) == form);  // idempotent
    for (const Word& member : trace_class(p4, w))
      CHECK(foata_normal_form(p4, member) == form);
  }
}

TEST_CASE("L-class witnesses for the seeded searches") {
  auto ba = l_witness_search(2, 2, parse_word("b a"), 16);
  REQUIRE(ba.has_value());
  CHECK(ba->p == parse_word("b a a b a a a a b a a"));
  CHECK(ba->q == parse_word("b"));

  auto a = l_witness_search(2, 2, parse_word("a"), 16);
  REQUIRE(a.has_value());
  CHECK(a->p == parse_word("b a a b a a a a b a a b"));
  CHECK(a->q == Word{});

  auto aba = l_witness_search(2, 2, parse_word("a b a"), 16);
  REQUIRE(aba.has_value());
  CHECK(aba->p.size() <= 14);

  CHECK_THROWS_AS(l_witness_search(2, 2, parse_word("a b"), 4), std::invalid_argument);
}

TEST_CASE("witness certificates re-verify under the complete system") {
  const CompleteSystem cs = certified_fcrs(2, 2);
  for (const char* text : {"a", "a a", "b a", "a b a", "b a a", "a a a"}) {
    auto witness = l_witness_search(2, 2, parse_word(text), 16);
    REQUIRE_MESSAGE(witness.has_value(), text);
    CHECK(cs.normal_form(witness->p * witness->w) == Word::letter("a"));
    CHECK(cs.normal_form(witness->q * Word::letter("a")) == cs.normal_form(witness->w));
    CHECK(witness->certificates.size() == 2);
  }
}

TEST_CASE("ball census at radius 2 matches the class count") {
  // 4 singles plus 16 pairs with the three commuting identifications
  TraceGraph p4 = TraceGraph::path({"u1", "u2", "u3", "u4"});
  const CompleteSystem cs = certified_fcrs(2, 2);
  auto witnesses = p4_trace_witnesses(2, 2);

  std::set<Word> forms, nfs;
  for (int i = 0; i < 4; ++i) {
    forms.insert(foata_normal_form(p4, Word::letter("u" + std::to_string(i + 1))));
    nfs.insert(cs.normal_form(witnesses[i]));
    for (int j = 0; j < 4; ++j) {
      forms.insert(foata_normal_form(
          p4, Word::letter("u" + std::to_string(i + 1)) *
                  Word::letter("u" + std::to_string(j + 1))));
      nfs.insert(cs.normal_form(witnesses[i] * witnesses[j]));
    }
  }
  CHECK(forms.size() == 17);
  CHECK(nfs.size() == 17);

  VerificationReport report = bounded_injectivity(2, 2, 2);
  CHECK(report.all_passed());
}

TEST_CASE("the reduction data pipeline assembles end to end") {
  // Build the witness table v_{i,j} with v_{i,j} u_i u_j = u_j from the
  // L-class searches, relabel the reversed gadget language over the trace
  // generators, and check the defining equality of the whole construction
  // on enumerated samples.
  const int m = 2, n = 2;
  const CompleteSystem cs = certified_fcrs(m, n);
  const auto x = p4_trace_witnesses(m, n);
  auto image = [&x](const Word& u_word) {
    Word out;
    for (const Symbol& s : u_word.syms)
      out *= x[static_cast<std::size_t>(s.name[1] - '1')];
    return out;
  };

  LetterWordTable v;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      auto p = l_witness_search(m, n, x[i] * x[j], 16);
      auto qj = l_witness_search(m, n, x[j], 16);
      REQUIRE(p.has_value());
      REQUIRE(qj.has_value());
      Word v_ij = qj->q * p->p;
      // v_{i,j} u_i u_j = u_j
      REQUIRE(cs.normal_form(v_ij * x[i] * x[j]) == cs.normal_form(x[j]));
      v.entries[{Symbol{"u" + std::to_string(i + 1), +1},
                 Symbol{"u" + std::to_string(j + 1), +1}}] = std::move(v_ij);
    }
  }

  // Q = the reversed gadget language relabeled a,b,c,d -> u1,u2,u3,u4.
  std::map<Symbol, Word> relabel{{Symbol{"a", +1}, Word::letter("u1")},
                                 {Symbol{"b", +1}, Word::letter("u2")},
                                 {Symbol{"c", +1}, Word::letter("u3")},
                                 {Symbol{"d", +1}, Word::letter("u4")}};
  Fsa q = hom_image(reverse(omega_language()), relabel);
  CHECK_FALSE(accepts(q, Word{}));

  const Word u2 = Word::letter("u2");
  Fsa qbar = build_qbar(q, v, u2);

  // On every sample w of Q: the formula word wbar is accepted by the
  // automaton, and wbar w u2 = u2 in R_{m,n}.
  const Word target = cs.normal_form(image(u2));
  std::size_t checked = 0;
  for (const Word& w : enumerate_language(q, 7)) {
    Word wu2 = w * u2;
    Word wbar;
    for (std::size_t k = wu2.size() - 1; k >= 1; --k)
      wbar *= v.at(wu2[k - 1], wu2[k]);
    CHECK(accepts(qbar, wbar));
    CHECK(cs.normal_form(wbar * image(w) * image(u2)) == target);
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("unknown family names are rejected") {
  CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
  CHECK(family_from_name("R") == Family::R);
  for (const std::string& name : family_names())
    CHECK(family_name(family_from_name(name)) == name);
}

TEST_SUITE_END();
