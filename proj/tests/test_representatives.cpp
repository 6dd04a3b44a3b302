#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "regsem/representatives.hpp"

using namespace regsem;

namespace {

struct Fixture {
  Semigroup sg;
  GreenData green;
  RepChoice reps;
  explicit Fixture(const char* text)
      : sg(corpus::make(text)),
        green(compute_green(sg)),
        reps(choose_representatives(sg, green)) {}
};

}  // namespace

TEST_CASE("canonical choice is coherent on the whole corpus") {
  for (const char* text :
       {corpus::lz2, corpus::lz3, corpus::rz2, corpus::ch2, corpus::ch3,
        corpus::ch4, corpus::ch5, corpus::z2, corpus::z3, corpus::z4,
        corpus::n3, corpus::b2, corpus::sl3, corpus::sl3z, corpus::rbv6}) {
    Fixture f(text);
    CHECK(validate_representatives(f.sg, f.green, f.reps).empty());
  }
}

TEST_CASE("representatives stay in their class and are class-constant") {
  Fixture f(corpus::b2);
  for (Elem s = 0; s < f.sg.order(); ++s) {
    CHECK(f.green.eq_R(s, f.reps.r(s)));
    CHECK(f.green.eq_L(s, f.reps.l(s)));
    for (Elem t = 0; t < f.sg.order(); ++t) {
      if (f.green.eq_R(s, t)) CHECK(f.reps.r(s) == f.reps.r(t));
      if (f.green.eq_L(s, t)) CHECK(f.reps.l(s) == f.reps.l(t));
    }
  }
}

TEST_CASE("anchored picks on the Brandt semigroup") {
  Fixture f(corpus::b2);
  const Elem e11 = f.sg.element("e11"), e12 = f.sg.element("e12");
  const Elem e21 = f.sg.element("e21"), e22 = f.sg.element("e22");
  // anchor L-class is that of e11 = {e11, e21}; R-reps land inside it
  CHECK(f.reps.r(e11) == e11);
  CHECK(f.reps.r(e12) == e11);
  CHECK(f.reps.r(e21) == e21);
  CHECK(f.reps.r(e22) == e21);
  // anchor R-class is {e11, e12}
  CHECK(f.reps.l(e11) == e11);
  CHECK(f.reps.l(e21) == e11);
  CHECK(f.reps.l(e12) == e12);
  CHECK(f.reps.l(e22) == e12);
  const Elem z = f.sg.element("z");
  CHECK(f.reps.r(z) == z);
  CHECK(f.reps.l(z) == z);
}

TEST_CASE("skew choice on a 2x2 grid is flagged") {
  Fixture f(corpus::b2);
  RepChoice skew = skew_representatives(f.sg, f.green);
  CHECK_FALSE(validate_representatives(f.sg, f.green, skew).empty());
}

TEST_CASE("overrides") {
  Fixture f(corpus::b2);
  SUBCASE("valid override moves the rep inside the class") {
    RepChoice r = apply_rep_overrides(f.sg, f.green, f.reps,
                                      "# move one R-rep\nR e21 e22\n");
    CHECK(r.r(f.sg.element("e21")) == f.sg.element("e22"));
    CHECK(r.r(f.sg.element("e22")) == f.sg.element("e22"));
    // now the two R-reps e11, e22 are not L-equivalent
    CHECK_FALSE(validate_representatives(f.sg, f.green, r).empty());
  }
  SUBCASE("rep outside the class is rejected") {
    CHECK_THROWS_AS(
        apply_rep_overrides(f.sg, f.green, f.reps, "R e21 e11\n"),
        ParseError);
  }
  SUBCASE("malformed lines are rejected") {
    CHECK_THROWS_AS(apply_rep_overrides(f.sg, f.green, f.reps, "Q e21 e22\n"),
                    ParseError);
    CHECK_THROWS_AS(apply_rep_overrides(f.sg, f.green, f.reps, "R e21\n"),
                    ParseError);
    CHECK_THROWS_AS(apply_rep_overrides(f.sg, f.green, f.reps, "R nope e22\n"),
                    ParseError);
  }
}
