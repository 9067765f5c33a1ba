#include <doctest.h>

#include "orth/textio.hpp"
#include "random_elements.hpp"

using namespace orth;
using namespace orth::test;

namespace {

template <class F>
SyntaxError syntax_error(F f) {
  try {
    f();
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("expected a syntax error");
  return SyntaxError(0, 0, "");
}

std::string category_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.category();
  }
  return "none";
}

}  // namespace

TEST_CASE("orthant records") {
  const Orthant L = parse_orthant("O base=(0,0) dir=(+,+)");
  CHECK(L == Orthant::positive(2));
  CHECK(serialize(L) == "O base=(0,0) dir=(+,+)");
  CHECK(parse_orthant("  O base=( -3 , 4,0 ) dir=(-,0,+) # trailing comment") ==
        Orthant::make({-3, 4, 0}, {-1, 0, 1}));
  CHECK(serialize(Orthant::make({-3, 4, 0}, {-1, 0, 1})) == "O base=(-3,4,0) dir=(-,0,+)");
}

TEST_CASE("syntax errors carry positions") {
  SyntaxError e = syntax_error([] { parse_orthant("O base=(0,0) dir=(+,x)"); });
  CHECK(e.category() == "syntax-error");
  CHECK(e.line() == 1);
  CHECK(e.column() == 21);

  e = syntax_error([] { parse_orthant("O base=(0,0)\n  dir=(+,*)"); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 10);

  e = syntax_error([] { parse_orthant("O base=(0,0) dir=(+,1)"); });
  CHECK(e.column() == 21);
  e = syntax_error([] { parse_orthant("O base=(0,0) dir=(+)"); });
  CHECK(e.column() == 18);
  e = syntax_error([] { parse_orthant("O base=(0,0) dir=(+,+) junk"); });
  CHECK(e.column() == 24);
  e = syntax_error([] { parse_set("[O base=(0,0) dir=(+,+), O base=(1) dir=(+)]"); });
  CHECK(e.column() == 26);
  e = syntax_error([] { parse_set("[]"); });
  CHECK(e.column() == 1);
  syntax_error([] { parse_orthant("O base=(99999999999999999999) dir=(+)"); });
  syntax_error([] { parse_germ("G dir=(+,0) frozen={0:1}"); });
  syntax_error([] { parse_graph("V 0:0 2:1"); });
  syntax_error([] { parse_record("Q"); });
  syntax_error([] { parse_record(""); });
}

TEST_CASE("semantic errors are forwarded") {
  CHECK(category_of([] { parse_set("[O base=(0,0) dir=(+,+), O base=(1,1) dir=(0,0)]"); }) == "overlapping-pieces");
  CHECK(category_of([] { parse_isometry("((0,0);(0,0);(+,+))"); }) == "invalid-isometry");
  CHECK(category_of([] {
          parse_pei("P domain=[O base=(0,0) dir=(+,+)] pieces=[(O base=(1,0) dir=(+,+), iso=((0,0);(0,1);(+,+)))]");
        }) == "not-covering");
  CHECK(category_of([] { parse_graph("V 0:0 1:0\nE 0 1"); }) == "invalid-graph");
}

TEST_CASE("sets round trip") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const OrthoSet S = random_set(rng, n, -5, 5, 4);
    const std::string text = serialize(S);
    const OrthoSet back = parse_set(text);
    CHECK(back.pieces() == S.pieces());
    CHECK(serialize(back) == text);
  }
  CHECK(serialize(parse_set("[dim=3]")) == "[dim=3]");
  CHECK(parse_set("[dim=3]").dim() == 3);
  CHECK(equals(parse_set("O base=(0) dir=(+)"), OrthoSet::of(Orthant::positive(1))));
}

TEST_CASE("germs and isometries round trip") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const Germ g = germ_of(random_orthant(rng, n, -5, 5));
    CHECK(parse_germ(serialize(g)) == g);
    const Isometry iso = random_iso(rng, n, 5);
    CHECK(parse_isometry(serialize(iso)) == iso);
  }
  CHECK(serialize(germ_of(Orthant::make({2, 3}, {1, 0}))) == "G dir=(+,0) frozen={1:3}");
  CHECK(parse_germ("G dir=(+,0) frozen={}").frozen == std::vector<Int>{0, 0});
}

TEST_CASE("a three-piece map file is a validated bijection") {
  // rotate three quadrant rays: cycle the stack members
  const char* text = R"(
    # three rays along axis 0
    P domain=[O base=(0,0) dir=(+,0), O base=(0,1) dir=(+,0), O base=(0,2) dir=(+,0)]
      pieces=[(O base=(0,0) dir=(+,0), iso=((0,1);(0,1);(+,+))),
              (O base=(0,1) dir=(+,0), iso=((0,1);(0,1);(+,+))),
              (O base=(0,2) dir=(+,0), iso=((0,-2);(0,1);(+,+)))]
  )";
  const PeiMap g = parse_pei(text);
  CHECK(g.bijective);
  CHECK(g.pet);
  const std::string once = serialize(g);
  const PeiMap back = parse_pei(once);
  CHECK(equals(back, g));
  CHECK(serialize(back) == once);
  CHECK(std::holds_alternative<PeiMap>(parse_record(text)));
}

TEST_CASE("random elements round trip") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Stack s = make_stack(3, static_cast<int>(uniform(rng, 1, 2)), static_cast<int>(uniform(rng, 2, 3)));
    const auto word = random_word(rng, s, s.k, 4);
    for (const Generator& g : word) {
      const std::string gt = serialize(g);
      CHECK(parse_generator(gt) == g);
      CHECK(std::holds_alternative<Generator>(parse_record(gt)));
    }
    const PeiMap g = realize_word(word, s.set);
    const PeiMap back = parse_pei(serialize(g));
    CHECK(equals(back, g));
    CHECK(back.bijective == g.bijective);
    CHECK(serialize(back) == serialize(g));
  }
}

TEST_CASE("graphs round trip") {
  const ColoredGraph k22 = parse_graph("V 0:0 1:0\nV 2:1 3:1\nE 0 2\nE 0 3\nE 1 2\nE 1 3\n");
  CHECK(k22.vertices() == 4);
  CHECK(k22.edges.size() == 4);
  CHECK(serialize(k22) == "V 0:0 1:0 2:1 3:1\nE 0 2\nE 0 3\nE 1 2\nE 1 3\n");
  CHECK(serialize(parse_graph(serialize(k22))) == serialize(k22));
  CHECK(std::holds_alternative<ColoredGraph>(parse_record("V 0:0")));
}

TEST_CASE("record dispatch") {
  CHECK(std::holds_alternative<Orthant>(parse_record("O base=(0) dir=(+)")));
  CHECK(std::holds_alternative<OrthoSet>(parse_record("[dim=1]")));
  CHECK(std::holds_alternative<Germ>(parse_record("G dir=(+) frozen={}")));
}
