#include <doctest.h>

#include "fpres/encoder.hpp"
#include "fpres/transform.hpp"

using namespace fpres;

namespace {

EncodingInput toy_input() {
  EncodingInput in;
  in.alphabet = {"a"};
  in.q = parse_word("a a");
  in.x = {parse_word("a")};
  in.x_inverse = {parse_word("a")};
  return in;
}

}  // namespace

TEST_SUITE_BEGIN("encoder");

TEST_CASE("the toy encoding instantiates all output fields") {
  EncodingOutput out = construction51(toy_input());
  CHECK(out.r == parse_word("t x t x"));
  CHECK(out.s == parse_word("x t x"));
  REQUIRE(out.z.size() == 1);
  CHECK(out.z[0] == parse_word("t x"));
  CHECK(out.zbar[0] == parse_word("t x"));

  REQUIRE(out.h_group.relations.size() == 2);
  CHECK(out.h_group.relations[1].first == parse_word("t t x x t x t t x x t x"));
  CHECK(out.h_group.kind == Kind::group);
  CHECK(out.m_inverse.kind == Kind::inverse);
  CHECK(out.m_inverse.relations == out.h_group.relations);
  CHECK(out.h_group.generators == std::vector<std::string>{"x", "t"});
  CHECK(out.certificates.size() == 1);

  // every output word is positive; r starts t x; s starts with x
  CHECK(out.r.positive());
  CHECK(out.s.positive());
  for (const Word& w : out.z) CHECK(w.positive());
  for (const Word& w : out.zbar) CHECK(w.positive());
  CHECK(is_positive(out.h_group));
  CHECK(out.s[0].name == out.x_name);
  CHECK(out.r[0].name == out.t_name);
  CHECK(out.r[1].name == out.x_name);
}

TEST_CASE("back-substitution recovers the inputs") {
  EncodingInput in = toy_input();
  EncodingOutput out = construction51(in);
  CHECK(unsubstitute(out.r, out.t_name, out.x_name, "a") == in.q);
  CHECK(unsubstitute(out.z[0], out.t_name, out.x_name, "a") == in.x[0]);
  CHECK(unsubstitute(out.zbar[0], out.t_name, out.x_name, "a") == in.x_inverse[0]);
}

TEST_CASE("an uncertifiable witness is rejected") {
  EncodingInput in = toy_input();
  in.x_inverse[0] = parse_word("a a");  // a * a^2 = a^3 = a, not 1, in <a | a^2 = 1>
  CHECK_THROWS_AS(construction51(in), std::invalid_argument);
}

TEST_CASE("a two-letter base with a nontrivial distinguished letter") {
  // <a, b | baab = 1> is a group; the distinguished letter is b, so the
  // substitution leaves a alone and B = {a}.
  EncodingInput in;
  in.alphabet = {"a", "b"};
  in.q = parse_word("b a a b");
  in.x = {parse_word("a"), parse_word("b a")};
  in.x_inverse = {parse_word("a b b"), parse_word("a b")};
  EncodingOutput out = construction51(in);

  CHECK(out.r == parse_word("t x a a t x"));
  CHECK(out.s == parse_word("x a a t x"));
  CHECK(out.z[0] == parse_word("a"));
  CHECK(out.zbar[0] == parse_word("a t x t x"));
  CHECK(out.z[1] == parse_word("t x a"));
  CHECK(out.h_group.generators == std::vector<std::string>{"a", "x", "t"});
  CHECK(unsubstitute(out.r, out.t_name, out.x_name, "b") == in.q);

  // abelianization of the output is that of the base group plus one Z
  Presentation base{Kind::group, {"a", "b"}, {}};
  base.relations.emplace_back(in.q, Word{});
  auto base_inv = abelianization(base);
  auto h_inv = abelianization(out.h_group);
  CHECK(h_inv.torsion == base_inv.torsion);
  CHECK(h_inv.free_rank == base_inv.free_rank + 1);
}

TEST_CASE("fresh generator names avoid the base alphabet") {
  EncodingInput in;
  in.alphabet = {"x", "t"};
  in.q = parse_word("x t");
  in.x = {parse_word("x t")};
  in.x_inverse = {parse_word("x t")};
  EncodingOutput out = construction51(in);
  CHECK(out.x_name != "x");
  CHECK(out.t_name != "t");
}

TEST_CASE("inverse witness search walks shortlex") {
  CHECK(find_inverse_witness({"a"}, parse_word("a a"), parse_word("a")) ==
        parse_word("a"));
  // ε is not a candidate: for w = a^2 = 1 the shortest positive witness is a^2
  CHECK(find_inverse_witness({"a"}, parse_word("a a"), parse_word("a a")) ==
        parse_word("a a"));

  // q = aba: whatever the search returns must re-certify by derivation
  auto found = find_inverse_witness({"a", "b"}, parse_word("a b a"), parse_word("b"),
                                    WitnessBound{6, 50'000});
  if (found) {
    Presentation monoid{Kind::monoid, {"a", "b"}, {}};
    monoid.relations.emplace_back(parse_word("a b a"), Word{});
    CHECK(derivation_reaches(monoid, parse_word("b") * *found, Word{}, 24, 200'000));
    CHECK(derivation_reaches(monoid, *found * parse_word("b"), Word{}, 24, 200'000));
  }
}

TEST_CASE("quasi-positive relator reduces the conjugation") {
  CHECK(quasi_positive_relator(parse_word("a b"), parse_word("b")) == parse_word("b a"));
  CHECK(quasi_positive_relator(parse_word("a"), parse_word("a")) == parse_word("a"));

  EncodingOutput out = construction51(toy_input());
  const Word v = out.h_group.relations[1].first;
  Word relator = quasi_positive_relator(out.r, v);
  CHECK(relator == free_reduce(relator));
  // the cancellation count is confirmed by an independent reduction pass
  Word raw = v * out.r * invert_word(v);
  CHECK(relator.size() == free_reduce(raw).size());
  CHECK((raw.size() - relator.size()) % 2 == 0);
}

TEST_CASE("two-relator inverse form") {
  Presentation p = two_relator_inverse_form(parse_word("a b"), parse_word("b a"));
  CHECK(p.kind == Kind::inverse);
  CHECK(p.generators == std::vector<std::string>{"a", "b", "t"});
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].first == parse_word("a b t"));
  CHECK(p.relations[1].first == parse_word("b a t"));
  CHECK(is_special(p));
  CHECK(is_positive(p));

  // duplicate relator retained
  Presentation dup = two_relator_inverse_form(parse_word("a"), parse_word("a"));
  CHECK(dup.relations.size() == 2);
  CHECK(dup.relations[0] == dup.relations[1]);

  // name collision: a fresh stable letter is chosen
  Presentation coll = two_relator_inverse_form(parse_word("t"), parse_word("t t"));
  CHECK(coll.generators.size() == 2);
  CHECK(coll.generators[1] != "t");
}

TEST_CASE("prefix generators deduplicate across relators") {
  auto single = prefix_generators({parse_word("a b")});
  REQUIRE(single.size() == 2);
  CHECK(single[0] == parse_word("a"));
  CHECK(single[1] == parse_word("a b"));

  CHECK(prefix_generators({parse_word("a")}) == std::vector<Word>{parse_word("a")});

  EncodingOutput out = construction51(toy_input());
  auto gens = prefix_generators({out.r, out.h_group.relations[1].first});
  CHECK(gens.size() == 15);  // 4 + 12 with only the shared prefix t
}

TEST_CASE("encoding input files parse") {
  EncodingFile file = parse_encoding_input(
      "kind: monoid\n"
      "gens: a\n"
      "rel: a a = 1\n"
      "x: a\n"
      "xbar: a\n");
  CHECK(file.input.q == parse_word("a a"));
  REQUIRE(file.input.x.size() == 1);
  CHECK(file.witness_given[0]);

  CHECK_THROWS_AS(parse_encoding_input("kind: monoid\ngens: a\nrel: a a = 1\n"),
                  ParseError);  // no x: lines
  CHECK_THROWS_AS(parse_encoding_input("kind: group\ngens: a\nrel: a a = 1\nx: a\n"),
                  ParseError);  // wrong kind
}

TEST_SUITE_END();
